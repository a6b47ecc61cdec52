"""Unit tests for AI Workflow."""
