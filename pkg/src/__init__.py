"""Minimal Niven numbers: the smallest multiple of k whose base-q digit sum is k.

`NIVEN_*` settings may come from a `.env` file in the working directory.
"""

from dotenv import load_dotenv


load_dotenv()
