# Root data, twists and the label calculus
