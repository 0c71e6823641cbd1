"""Utility Funktionen"""
