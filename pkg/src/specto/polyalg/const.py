# Aberth 반복 상한과 근 분리 판정에 쓰는 값입니다.
ABERTH_MAX_STEPS = 500
GUARD_DIGITS = 20
# 부분집합 재구성에서 계수 허수부를 0으로 볼 허용치입니다.
IMAG_TOLERANCE = 1e-6
