import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

class Config:
    # Enumeration cache
    CACHE_DIR = os.getenv('LAMBDA_CACHE_DIR', '.lambda-cache')

    # Search parallelism
    WORKERS = int(os.getenv('LAMBDA_WORKERS', '1'))
    SPLIT_DEPTH = int(os.getenv('LAMBDA_SPLIT_DEPTH', '8'))

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')
