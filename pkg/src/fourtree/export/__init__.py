"""Renderers for graphs, woods and tree pairs."""

from fourtree.export.dot import render_dot
from fourtree.export.layout import tutte_layout
from fourtree.export.svg import render_svg
