from src.log.log_service import LogService, LOG_INFO, LOG_ERROR


def test_format_message():
    assert LogService.format_message("fitted", "evaluation", LOG_INFO) == "[INFO]    evaluation: fitted"


def test_writes_to_the_log_file(tmp_path):
    log_path = tmp_path / "run.log"
    logger = LogService(str(log_path), do_print=False)

    logger.log_info("first", "cli")
    logger.log_error(ValueError("second"), "cli")

    text = log_path.read_text()
    assert "[INFO]    cli: first" in text
    assert "[ERROR]   cli: second" in text
    assert text.count("UTC") == 2


def test_console_goes_to_stderr(capsys):
    LogService().log_warning("careful", "db")
    captured = capsys.readouterr()

    assert captured.out == ""
    assert "[WARNING] db: careful" in captured.err


def test_quiet_logger_prints_nothing(capsys, quiet_logger):
    quiet_logger.log_info("hidden", "cli")
    assert capsys.readouterr().err == ""
