"""Tests for AI Workflow."""
