"""saltbox-roof library."""
from honeybee.logutil import get_logger


logger = get_logger(__name__, filename='saltbox-roof.log')
