"""
Rainbowless - Certificate Files
==================================
Certificates as YAML documents:

    outcome: EXHAUSTED | WITNESS | BUDGET_EXCEEDED
    problem: {n, k, targets, gallai_constraint, ...}
    stats:   {nodes, prunes, wall_time}
    witness: canonical coloring text (WITNESS only)
    checkpoint_id, notes, extra

Files are written atomically; a crashed run never leaves a partial
certificate that parses.
"""

import yaml

from core.storage import atomic_write_text, read_text
from search.problem import Certificate, Outcome, SearchProblem, SearchStats
from services.formats import parse_coloring, serialize_coloring


class _CertificateDumper(yaml.SafeDumper):
    pass


def _str_presenter(dumper: yaml.SafeDumper, data: str):
    # Multi-line strings (the embedded coloring) as literal blocks
    if "\n" in data:
        return dumper.represent_scalar("tag:yaml.org,2002:str", data, style="|")
    return dumper.represent_scalar("tag:yaml.org,2002:str", data)


_CertificateDumper.add_representer(str, _str_presenter)


def certificate_to_dict(cert: Certificate) -> dict:
    doc = {
        "outcome": cert.outcome.value,
        "problem": cert.problem.to_dict(),
        "problem_hash": cert.problem.problem_hash(),
        "stats": cert.stats.to_dict(),
    }
    if cert.witness is not None:
        doc["witness"] = serialize_coloring(cert.witness)
    if cert.checkpoint_id:
        doc["checkpoint_id"] = cert.checkpoint_id
    if cert.notes:
        doc["notes"] = list(cert.notes)
    if cert.extra:
        doc["extra"] = cert.extra
    return doc


def serialize_certificate(cert: Certificate) -> str:
    return yaml.dump(certificate_to_dict(cert), Dumper=_CertificateDumper, sort_keys=False, allow_unicode=True)


def parse_certificate(text: str) -> Certificate:
    """
    Raises:
        ValueError: The document is not a certificate.
    """
    doc = yaml.safe_load(text)
    if not isinstance(doc, dict) or "outcome" not in doc or "problem" not in doc:
        raise ValueError("not a certificate document")
    witness = parse_coloring(doc["witness"]) if doc.get("witness") else None
    return Certificate(
        problem=SearchProblem.from_dict(doc["problem"]),
        outcome=Outcome(doc["outcome"]),
        witness=witness,
        stats=SearchStats.from_dict(doc.get("stats") or {}),
        checkpoint_id=doc.get("checkpoint_id"),
        notes=list(doc.get("notes") or []),
        extra=dict(doc.get("extra") or {}),
    )


def save_certificate(path: str, cert: Certificate, overwrite: bool = False) -> str:
    return atomic_write_text(path, serialize_certificate(cert), overwrite=overwrite)


def load_certificate(path: str) -> Certificate:
    return parse_certificate(read_text(path))


def certificate_name(cert: Certificate, stem: str) -> str:
    """File name like ``gr-C4-C4-C4-n7-exhausted.yaml``."""
    p = cert.problem
    labels = "-".join(t.label.replace(",", "_") for t in p.per_color_targets)
    return f"{stem}-{labels}-n{p.n}-{cert.outcome.value.lower()}.yaml"
