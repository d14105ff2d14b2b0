"""Tests for GP Toolkit"""
