from app.cli import CertifyRequest, build_parser, main
from app.report import flatten, jsonable, write_report, write_table
from app.verify import SUITES, run_suites, summarize
