"""Non-ruled residue extensions of valuations on elliptic function fields."""
