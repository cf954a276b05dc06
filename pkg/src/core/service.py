from ..etc.config_service import ConfigService
from ..log.log_service import LogService

"""
Base class which all services should extend - this will
hold base information for stackcast - config ref, logger, etc
"""
class Service:
    def __init__(self, config: ConfigService = None, logger: LogService = None):
        self.config: ConfigService = config if config is not None else ConfigService()
        self.logger: LogService = logger if logger is not None else LogService(self.config.log_path)
