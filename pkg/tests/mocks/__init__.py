# Mock implementations for testing
