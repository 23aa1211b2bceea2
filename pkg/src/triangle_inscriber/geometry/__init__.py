"""Shape spaces of triangles and simplexes."""
