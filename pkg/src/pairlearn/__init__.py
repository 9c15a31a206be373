"""Semi-supervised category learning from paired stimuli.

A numpy/scipy library for running few-shot category-learning experiments:
procedurally generated compare/contrast stimulus pairs, a Siamese
shared-encoder network trained with a mixed supervised / pair-consistency /
contrastive objective, a seeded condition x seed sweep harness, and
factorial analysis of the resulting accuracies.
"""

__version__ = "0.1.0"
