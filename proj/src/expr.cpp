// placeholder; real implementation added with the expression parser
