"""
Command-line front-end.

Graphs are given as named-graph expressions (``C5``, ``K1,3+co(C6)``) or as
``@path`` to an edge-list file. Results go to stdout as JSON unless a command
offers another format; errors go to stderr as ``error: <message>``.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from atlas.classes import ClassId, class_members, deletion_set, in_class
from chromatic.chordal import is_chordal
from chromatic.dispatch import METHOD_AUTO, METHODS, solve
from chromatic.matching import is_o3_free
from chromatic.structural import CLAW_HAMMER, CLAW_P5, P5_C4
from classifier.classify import Verdict, atlas_table, classify_pair, classify_single, display_name
from cli.schemas import (
    AtlasOutput,
    AtlasRowOutput,
    AtlasSummaryOutput,
    CheckFreeOutput,
    ChromaticOutput,
    ImplantOutput,
    ImplantSiteOutput,
    RecognizeOutput,
    VerdictOutput,
)
from core.bits import popcount, to_list
from core.catalog import GraphCatalog
from core.config import ToolkitConfig
from core.edge_list import format_edge_list, parse_edge_list
from core.errors import ContractError, ToolkitError, UnsupportedInstanceError
from core.graph import Graph
from core.logging_setup import configure_logging
from core.named import named
from embedding.families import pattern
from embedding.induced import find_forbidden, is_free
from gadgets.diamond import reduce_to_K14_bull_free

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_UNSUPPORTED = 3

# Accepted spellings of the class names on the command line
CLASS_NAMES: Dict[str, ClassId] = {
    "F": ClassId.F,
    "S": ClassId.S,
    "T": ClassId.T,
    "T'": ClassId.T_PRIME,
    "Tprime": ClassId.T_PRIME,
    "co(T)": ClassId.CO_T,
    "coT": ClassId.CO_T,
}


def parse_graph_arg(text: str) -> Graph:
    """
    Read a graph argument.

    Args:
        text: Named-graph expression, or ``@path`` of an edge-list file

    Returns:
        The graph

    Raises:
        GraphSpecError: If the expression or file content does not parse
        OSError: If the file cannot be read
    """
    if text.startswith("@"):
        with open(text[1:], "r") as f:
            return parse_edge_list(f.read())
    return named(text)


def _verdict_output(verdict: Verdict) -> VerdictOutput:
    return VerdictOutput(
        status=verdict.status.value,
        rule=verdict.rule,
        citation=verdict.citation,
        witness=verdict.witness,
    )


def cmd_chromatic(args: argparse.Namespace) -> str:
    graph = parse_graph_arg(args.graph)
    chi, coloring, method = solve(graph, args.method)
    return ChromaticOutput(chi=chi, coloring=list(coloring.colors), method=method).model_dump_json(
        indent=2
    )


def cmd_check_free(args: argparse.Namespace) -> str:
    graph = parse_graph_arg(args.graph)
    patterns = [parse_graph_arg(spec) for spec in args.patterns]
    hit = find_forbidden(graph, patterns)
    if hit is None:
        return CheckFreeOutput(free=True).model_dump_json(indent=2)
    index, embedding = hit
    return CheckFreeOutput(free=False, pattern=index, witness=list(embedding)).model_dump_json(
        indent=2
    )


def cmd_classify(args: argparse.Namespace) -> str:
    graphs = [parse_graph_arg(spec) for spec in args.graphs]
    if len(graphs) == 1:
        verdict = classify_single(graphs[0])
    elif len(graphs) == 2:
        verdict = classify_pair(graphs[0], graphs[1])
    else:
        raise ContractError(f"classify takes one or two graphs, got {len(graphs)}")
    return _verdict_output(verdict).model_dump_json(indent=2)


def cmd_atlas(args: argparse.Namespace) -> str:
    config = ToolkitConfig.get()
    max_n = args.max_n if args.max_n is not None else config.atlas.default_max_n
    output_format = args.format or config.atlas.default_format
    table = atlas_table(max_n)
    summary = table.summary()

    if output_format == "tsv":
        lines = ["first\tsecond\tstatus\trule"]
        for row in table.rows:
            rule = row.verdict.rule or "-"
            lines.append(f"{row.first_name}\t{row.second_name}\t{row.verdict.status.value}\t{rule}")
        lines.append("# " + " ".join(f"{key}={value}" for key, value in summary.items()))
        return "\n".join(lines)

    rows = [
        AtlasRowOutput(
            first=row.first_name,
            second=row.second_name,
            first_form=row.first.hex(),
            second_form=row.second.hex(),
            status=row.verdict.status.value,
            rule=row.verdict.rule,
        )
        for row in table.rows
    ]
    output = AtlasOutput(
        max_n=max_n,
        graphs=table.graph_count,
        summary=AtlasSummaryOutput(**summary),
        rows=rows,
    )
    return output.model_dump_json(indent=2)


def cmd_implant(args: argparse.Namespace) -> str:
    graph = parse_graph_arg(args.graph)
    reduced, trace = reduce_to_K14_bull_free(graph)
    if args.format == "json":
        sites = [ImplantSiteOutput(x=site.x, a=to_list(site.a), b=to_list(site.b)) for site in trace]
        return ImplantOutput(n=reduced.n, edges=reduced.edges(), trace=sites).model_dump_json(
            indent=2
        )
    comments = [f"implant {step}: {site.describe()}" for step, site in enumerate(trace, 1)]
    return format_edge_list(reduced, comments).rstrip("\n")


def cmd_recognize(args: argparse.Namespace) -> str:
    graph = parse_graph_arg(args.graph)
    limits = ToolkitConfig.get().limits
    classes: Dict[str, Optional[bool]] = {}
    for cls in ClassId:
        lookup = cls not in (ClassId.F, ClassId.S)
        too_large = lookup and graph.n > limits.class_lookup_max_n
        classes[cls.value] = None if too_large else in_class(graph, cls)

    distance: Optional[int] = None
    if graph.n <= limits.deletion_search_max_n:
        found = deletion_set(graph, [pattern("O3")], 5)
        distance = None if found is None else popcount(found)

    output = RecognizeOutput(
        n=graph.n,
        classes=classes,
        chordal=is_chordal(graph)[0],
        o3_free=is_o3_free(graph),
        claw_p5_free=is_free(graph, [pattern(spec) for spec in CLAW_P5]),
        claw_hammer_free=is_free(graph, [pattern(spec) for spec in CLAW_HAMMER]),
        p5_c4_free=is_free(graph, [pattern(spec) for spec in P5_C4]),
        o3_deletion_distance=distance,
    )
    return output.model_dump_json(indent=2)


def _catalog_comment(graph: Graph) -> str:
    """Display name of a class member, followed by its catalog description if it has one."""
    name = display_name(graph)
    entry = GraphCatalog.get_entry(name)
    if entry is not None and entry.description:
        return f"{name}: {entry.description}"
    return name


def cmd_catalog(args: argparse.Namespace) -> str:
    members = class_members(CLASS_NAMES[args.cls], args.max_n)
    return "".join(format_edge_list(graph, [_catalog_comment(graph)]) for graph in members).rstrip(
        "\n"
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace], str]] = {
    "chromatic": cmd_chromatic,
    "check-free": cmd_check_free,
    "classify": cmd_classify,
    "atlas": cmd_atlas,
    "implant": cmd_implant,
    "recognize": cmd_recognize,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcolor",
        description="Coloring and complexity tools for graphs defined by forbidden induced subgraphs",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--config", help="toolkit configuration file to use instead of the default")
    sub = parser.add_subparsers(dest="command", required=True)

    chromatic = sub.add_parser("chromatic", help="chromatic number and an optimal coloring")
    chromatic.add_argument("graph")
    chromatic.add_argument("--method", choices=METHODS, default=METHOD_AUTO)

    check_free = sub.add_parser("check-free", help="test for forbidden induced subgraphs")
    check_free.add_argument("graph")
    check_free.add_argument("patterns", nargs="+")

    classify = sub.add_parser("classify", help="complexity of coloring Free(H) or Free({H1, H2})")
    classify.add_argument("graphs", nargs="+")

    atlas = sub.add_parser("atlas", help="classify all pairs of small connected graphs")
    atlas.add_argument("--max-n", type=int, default=None)
    atlas.add_argument("--format", choices=("json", "tsv"), default=None)

    implant = sub.add_parser("implant", help="diamond implantation to a {K1,4, bull}-free graph")
    implant.add_argument("graph")
    implant.add_argument("--format", choices=("edgelist", "json"), default="edgelist")

    recognize = sub.add_parser("recognize", help="class memberships of a graph")
    recognize.add_argument("graph")

    catalog = sub.add_parser("catalog", help="members of a limit class as edge lists")
    catalog.add_argument("cls", choices=sorted(CLASS_NAMES))
    catalog.add_argument("--max-n", type=int, required=True)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name; defaults to ``sys.argv[1:]``

    Returns:
        Exit code: 0 on success, 2 on invalid input or contract violations,
        3 when no solver applies
    """
    args = build_parser().parse_args(argv)
    try:
        if args.config:
            ToolkitConfig.use(ToolkitConfig.load_from_file(args.config))
        configure_logging(ToolkitConfig.get().logging, "DEBUG" if args.verbose else None)
        output = COMMANDS[args.command](args)
    except UnsupportedInstanceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (ToolkitError, OSError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR

    print(output)
    return EXIT_OK
