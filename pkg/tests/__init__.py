# Tests for kcover-toolkit
