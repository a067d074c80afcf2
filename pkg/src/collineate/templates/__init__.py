"""Jinja2 templates for the human readable reports."""
