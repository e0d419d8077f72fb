from enum import IntEnum


class ExitCode(IntEnum):
    OK = 0
    INPUT_ERROR = 2
    INVARIANT_ERROR = 3
    REPRODUCTION_MISMATCH = 4


SCHEMA_VERSION = "1"

# 내장 족의 기준값 (상수항)
FAMILY1_M = 20
FAMILY1_CONSTANT = 40
FAMILY2_M = 8
FAMILY2_CONSTANT = 16
FAMILY3_M = 30
FAMILY3_A = "0" * 29 + "1"
FAMILY3_B = "1" * 30
