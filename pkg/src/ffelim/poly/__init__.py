"""Polynomial types: dense univariate, sparse multivariate, text grammar."""
