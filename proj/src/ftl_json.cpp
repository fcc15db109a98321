// placeholder; real implementation added with the JSON layer
