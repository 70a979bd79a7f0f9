"""Prime field arithmetic."""
