# Replaced with the current commit when building the wheels.
__commit__ = "{{ENTRENCH_COMMIT_SHA}}"
__version__ = "0.1.0"
