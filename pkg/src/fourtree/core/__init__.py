"""Graph algorithms: embedding, woods, path partitions, selection and checks."""
