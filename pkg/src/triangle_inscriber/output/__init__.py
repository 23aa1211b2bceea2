"""JSON reports and SVG figures."""
