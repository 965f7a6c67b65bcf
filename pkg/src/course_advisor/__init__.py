"""Course recommendations mined from registration histories.

The pipeline: parse enrollment CSVs, build per-semester transactions for a
major, mine frequent course itemsets and association rules (Apriori),
filter the rules against one student's history, and rank the surviving
consequents into a suggestion list.
"""

from .advisor import AdviceReport, Suggestion, advise, advise_with_rules
from .apriori import (
    AssociationRule,
    FrequentItemsets,
    Itemset,
    MiningParams,
    count_support,
    generate_candidates,
    generate_rules,
    mine_frequent,
)
from .errors import DataError, MajorConflictError, ParseError, UnknownStudentError
from .ingest import (
    Enrollment,
    StudentProfile,
    Transaction,
    TransactionDB,
    build_profile,
    build_transactions,
    parse_records,
    records_to_csv,
    summarize_dataset,
)
from .synthetic import CourseCluster, SynthParams, generate_csv, generate_enrollments

__version__ = "0.1.0"

__all__ = [
    "AdviceReport",
    "AssociationRule",
    "CourseCluster",
    "DataError",
    "Enrollment",
    "FrequentItemsets",
    "Itemset",
    "MajorConflictError",
    "MiningParams",
    "ParseError",
    "StudentProfile",
    "Suggestion",
    "SynthParams",
    "Transaction",
    "TransactionDB",
    "UnknownStudentError",
    "advise",
    "advise_with_rules",
    "build_profile",
    "build_transactions",
    "count_support",
    "generate_candidates",
    "generate_csv",
    "generate_enrollments",
    "generate_rules",
    "mine_frequent",
    "parse_records",
    "records_to_csv",
    "summarize_dataset",
]
