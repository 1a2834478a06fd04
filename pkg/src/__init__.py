# Hyperbox - box products, exponentials and weak walks for hypergraphs
