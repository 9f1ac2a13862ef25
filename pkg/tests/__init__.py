"""Test suite for the EHIG toolkit"""
