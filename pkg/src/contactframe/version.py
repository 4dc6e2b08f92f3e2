"""Engine version, stamped into every verification report."""

ENGINE_VERSION = "0.1.0"
