from utils.metrics import SuiteTimer
from utils.settings import Settings, get_settings
