"""morphstudio: an artist-in-the-loop workbench for a 12-parameter generative form system.

Subpackages:
    morphogen  -- deterministic 2D differential-growth simulation and rendering
    featurize  -- image feature vectors (builtin extractor + binary import/export)
    predict    -- MLP / k-NN predictors, metrics, confidence tooling
    embed      -- 2D layouts via exact t-SNE and PCA
    explore    -- parameter sweeps, cross-sections, transition and candidate search
    workbench  -- record store, training jobs, CLI and HTTP service
"""

__version__ = "0.1.0"
