"""
Rule book for the complexity classifier.

Rule metadata lives in config/rules.json; the predicates are bound here from
classifier.predicates.
"""
import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from classifier.predicates import PAIR_PREDICATES, SINGLE_PREDICATES
from core.config import CONFIG_DIR
from core.errors import InternalInvariantError

logger = logging.getLogger(__name__)

RULES_FILE = CONFIG_DIR / "rules.json"


class RuleKind(Enum):
    NPC = "NPC"
    POLY = "POLY"


@dataclass
class Rule:
    """One complexity rule with its citation."""
    rule_id: str
    kind: RuleKind
    citation: str
    monogenic: bool = False


class RuleBook:
    """Registry of complexity rules, in the order they are tried."""

    _rules: Dict[str, Rule] = {}
    _initialized: bool = False

    @classmethod
    def initialize(cls) -> None:
        """
        Load rule metadata and check that every rule has a predicate.

        Raises:
            InternalInvariantError: If a rule in the file has no predicate or a
                predicate has no entry in the file
        """
        if cls._initialized:
            return

        with open(RULES_FILE, "r") as f:
            rules_data = json.load(f)

        for rule_id, data in rules_data.items():
            monogenic = rule_id in SINGLE_PREDICATES
            if not monogenic and rule_id not in PAIR_PREDICATES:
                raise InternalInvariantError(f"rule {rule_id} has no predicate")
            cls._rules[rule_id] = Rule(
                rule_id=rule_id,
                kind=RuleKind(data["kind"]),
                citation=data["citation"],
                monogenic=monogenic,
            )

        missing = (set(PAIR_PREDICATES) | set(SINGLE_PREDICATES)) - set(cls._rules)
        if missing:
            raise InternalInvariantError(f"predicates without rule metadata: {sorted(missing)}")

        logger.debug("loaded %d rules", len(cls._rules))
        cls._initialized = True

    @classmethod
    def get(cls, rule_id: str) -> Optional[Rule]:
        """
        Get a rule by id.

        Args:
            rule_id: Identifier such as ``"N11"``

        Returns:
            Rule if found, None otherwise
        """
        if not cls._initialized:
            cls.initialize()

        return cls._rules.get(rule_id)

    @classmethod
    def pair_rules(cls, kind: RuleKind) -> List[Rule]:
        """
        Pair rules of one kind, ordered by rule number.

        Args:
            kind: NPC or POLY

        Returns:
            List of rules
        """
        if not cls._initialized:
            cls.initialize()

        rules = [
            rule for rule in cls._rules.values() if rule.kind is kind and not rule.monogenic
        ]
        return sorted(rules, key=lambda rule: int(rule.rule_id[1:]))

    @classmethod
    def monogenic_rules(cls) -> List[Rule]:
        if not cls._initialized:
            cls.initialize()

        return [rule for rule in cls._rules.values() if rule.monogenic]

    @classmethod
    def reset(cls) -> None:
        """Forget loaded rules; the next access reloads the file."""
        cls._rules = {}
        cls._initialized = False
