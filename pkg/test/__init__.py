"""Tests of quiverpoly package."""
