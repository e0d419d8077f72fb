"""치환 동역학계의 스펙트럼 특이성 분석기입니다. 명령줄 진입점은 specto.cli.main 입니다."""
