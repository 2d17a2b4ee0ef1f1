"""Decision procedures and scans for the classes C_m."""
