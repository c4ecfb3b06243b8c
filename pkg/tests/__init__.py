# Tests for dynauto
