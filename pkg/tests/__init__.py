"""
Test suite for OrientLab

Unit tests for the core modules plus CLI and HTTP integration tests.
"""
