from mock_eisenstein.monitors.logging_monitor import LoggingMonitor

__all__ = ["LoggingMonitor"]
