"""Versioned JSON instance files.

One canonical text format: candidate names and tie-break order, a metric
block (Euclidean points or an explicit matrix over voters-then-candidates),
one voter record per group (point for Euclidean metrics, weight, radius),
and an optional embedded certificate so fixture files are self-checking.

Numbers round-trip losslessly: integers as JSON ints, rationals as "p/q"
strings, floats as JSON floats (repr precision), infinity as the literal
string "inf".
"""

from __future__ import annotations

import hashlib
import json
import math
from fractions import Fraction
from typing import Optional

from .distortion import DistortionValue
from .errors import ParseError
from .generators import HardInstanceCertificate
from .model import (
    ElectionInstance,
    EuclideanMetric,
    MatrixMetric,
    RankingProfile,
    TieBreakOrder,
)
from .numerics import decode_number, encode_number

FORMAT_NAME = "metric-election"
FORMAT_VERSION = 1


def instance_to_dict(
    instance: ElectionInstance, certificate: Optional[HardInstanceCertificate] = None
) -> dict:
    doc: dict = {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "names": list(instance.names),
        "lex": [instance.names[c] for c in instance.lex.order],
    }
    metric = instance.metric
    if isinstance(metric, EuclideanMetric):
        doc["metric"] = {
            "type": "euclidean",
            "dim": metric.dim,
            "candidates": [[encode_number(x) for x in p] for p in metric.candidate_points],
        }
        voters = [
            {
                "point": [encode_number(x) for x in metric.voter_points[i]],
                "weight": instance.weights[i],
                "radius": encode_number(instance.radii[i]),
            }
            for i in range(instance.groups)
        ]
    else:
        doc["metric"] = {
            "type": "matrix",
            "entries": [[encode_number(x) for x in row] for row in metric.entries],
        }
        voters = [
            {"weight": instance.weights[i], "radius": encode_number(instance.radii[i])}
            for i in range(instance.groups)
        ]
    doc["voters"] = voters
    if certificate is not None:
        doc["certificate"] = certificate_to_dict(certificate, instance)
    return doc


def certificate_to_dict(cert: HardInstanceCertificate, instance: ElectionInstance) -> dict:
    doc = {
        "rules": list(cert.rules),
        "winner": instance.names[cert.expected_winner],
        "optimal": instance.names[cert.expected_optimal],
        "optimal_kind": cert.optimal_kind,
        "distortion_kind": cert.distortion_kind,
        "expected": encode_number(cert.expected.value),
        "tolerance": cert.tolerance,
    }
    if cert.limit is not None:
        doc["limit"] = encode_number(cert.limit.value)
    if cert.profile is not None:
        doc["profile"] = [
            [instance.names[c] for c in ranking] for ranking in cert.profile.rankings
        ]
    if cert.extras:
        doc["extras"] = {k: _encode_extra(v) for k, v in cert.extras.items()}
    return doc


def _encode_extra(value):
    if isinstance(value, (list, tuple)):
        return [_encode_extra(v) for v in value]
    if isinstance(value, str):
        return value
    return encode_number(value)


def _decode_extra(value):
    if isinstance(value, list):
        return tuple(_decode_extra(v) for v in value)
    if isinstance(value, str) and ("/" in value or value == "inf"):
        return decode_number(value)
    return value


def serialize_instance(
    instance: ElectionInstance, certificate: Optional[HardInstanceCertificate] = None
) -> str:
    return json.dumps(instance_to_dict(instance, certificate), indent=2, sort_keys=True) + "\n"


def instance_digest(instance: ElectionInstance) -> str:
    payload = json.dumps(instance_to_dict(instance), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _decode_point(values, field: str) -> tuple:
    try:
        return tuple(decode_number(v) for v in values)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), field)


def parse_instance(
    text: str,
) -> tuple[ElectionInstance, Optional[HardInstanceCertificate]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}")
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise ParseError(f"not a {FORMAT_NAME} document", "format")
    if doc.get("version") != FORMAT_VERSION:
        raise ParseError(f"unsupported version {doc.get('version')!r}", "version")
    names = doc.get("names")
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise ParseError("names must be a list of strings", "names")
    index = {name: c for c, name in enumerate(names)}
    lex_names = doc.get("lex", names)
    try:
        lex = TieBreakOrder(tuple(index[x] for x in lex_names))
    except (KeyError, ValueError) as exc:
        raise ParseError(f"bad tie-break order: {exc}", "lex")
    voters = doc.get("voters")
    if not isinstance(voters, list) or not voters:
        raise ParseError("at least one voter record required", "voters")
    weights, radii = [], []
    for k, rec in enumerate(voters):
        if not isinstance(rec, dict):
            raise ParseError("voter records must be objects", f"voters[{k}]")
        weights.append(rec.get("weight", 1))
        try:
            radii.append(decode_number(rec.get("radius", 0)))
        except ValueError as exc:
            raise ParseError(str(exc), f"voters[{k}].radius")
    metric_doc = doc.get("metric")
    if not isinstance(metric_doc, dict):
        raise ParseError("a metric block is required", "metric")
    try:
        if metric_doc.get("type") == "euclidean":
            dim = metric_doc["dim"]
            cand_points = tuple(
                _decode_point(p, "metric.candidates") for p in metric_doc["candidates"]
            )
            voter_points = tuple(
                _decode_point(rec["point"], f"voters[{k}].point")
                for k, rec in enumerate(voters)
            )
            metric = EuclideanMetric(dim, voter_points, cand_points)
        elif metric_doc.get("type") == "matrix":
            entries = tuple(
                _decode_point(row, "metric.entries") for row in metric_doc["entries"]
            )
            metric = MatrixMetric(len(voters), len(names), entries)
        else:
            raise ParseError(
                f"unknown metric type {metric_doc.get('type')!r}", "metric.type"
            )
        instance = ElectionInstance(metric, tuple(weights), tuple(radii), lex, tuple(names))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), "metric")
    certificate = None
    if "certificate" in doc:
        certificate = _parse_certificate(doc["certificate"], instance)
    return instance, certificate


def _parse_certificate(doc: dict, instance: ElectionInstance) -> HardInstanceCertificate:
    try:
        profile = None
        if "profile" in doc:
            rankings = tuple(
                tuple(instance.index_of(name) for name in ranking)
                for ranking in doc["profile"]
            )
            profile = RankingProfile(rankings, instance.weights, instance.m)
        limit = None
        if "limit" in doc:
            limit = DistortionValue(decode_number(doc["limit"]))
        extras = {k: _decode_extra(v) for k, v in doc.get("extras", {}).items()}
        return HardInstanceCertificate(
            rules=tuple(doc["rules"]),
            expected_winner=instance.index_of(doc["winner"]),
            expected_optimal=instance.index_of(doc["optimal"]),
            optimal_kind=doc["optimal_kind"],
            distortion_kind=doc["distortion_kind"],
            expected=DistortionValue(decode_number(doc["expected"])),
            tolerance=doc.get("tolerance", 0.0),
            limit=limit,
            profile=profile,
            extras=extras,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(str(exc), "certificate")
