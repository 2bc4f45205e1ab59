"""NFN-MK: neuro-fuzzy function approximation with SOM-placed triangular partitions."""
