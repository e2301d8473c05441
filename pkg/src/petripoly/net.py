"""Petri nets: conditions, events, and the operations that combine them.

A net is a finite set of condition ids plus a sequence of events, each
with a pre-set and a post-set of conditions.  The idle event (empty pre
and post) is implicit in every net and never stored; constructions that
would produce it account for that convention explicitly.

Events form a sequence rather than a set because two distinct events
may carry identical pre/post sets.  Labelings — injective maps from
conditions to naturals — are plain dicts and live alongside the net,
not inside it.
"""

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Optional

from .errors import NetStructureError, ParseError, PreconditionError

__all__ = [
    "Event",
    "PetriNet",
    "Labeling",
    "validate",
    "check_labeling",
    "isolated_conditions",
    "product",
    "attach",
    "are_isomorphic",
    "to_dot",
    "net_document",
    "write_net",
    "read_net",
]

Labeling = dict  # ConditionId -> nonnegative int, injective


@dataclass(frozen=True)
class Event:
    """One event: an id plus its pre- and post-condition sets."""

    id: str
    pre: frozenset = field(default_factory=frozenset)
    post: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pre", frozenset(self.pre))
        object.__setattr__(self, "post", frozenset(self.post))


@dataclass(frozen=True)
class PetriNet:
    """A finite net: condition ids and a sequence of events.

    Construction is permissive — dangling references and duplicate event
    ids are representable, so that :func:`validate` can report them.
    """

    conditions: frozenset = field(default_factory=frozenset)
    events: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "conditions", frozenset(self.conditions))
        object.__setattr__(self, "events", tuple(self.events))


def validate(net: PetriNet) -> list[str]:
    """Check structure; raise on hard errors, return a list of warnings.

    Hard errors (:class:`NetStructureError`): duplicate event ids,
    events referencing unknown conditions.  Warnings: isolated
    conditions and events with empty pre-sets, both structurally legal.
    """
    seen = set()
    for event in net.events:
        if event.id in seen:
            raise NetStructureError(f"duplicate event id {event.id!r}")
        seen.add(event.id)
    for event in net.events:
        for b in sorted(event.pre | event.post):
            if b not in net.conditions:
                raise NetStructureError(
                    f"event {event.id!r} references unknown condition {b!r}"
                )
    warnings = [f"isolated condition {b}" for b in sorted(isolated_conditions(net))]
    warnings.extend(f"event {e.id} has empty pre" for e in net.events if not e.pre)
    return warnings


def isolated_conditions(net: PetriNet) -> frozenset:
    """Conditions that occur in no event's pre- or post-set."""
    used = set()
    for event in net.events:
        used |= event.pre | event.post
    return net.conditions - used


def check_labeling(net: PetriNet, labeling: Labeling) -> None:
    """Raise :class:`PreconditionError` unless ``labeling`` is an injective
    map from exactly the net's conditions to nonnegative integers."""
    if set(labeling) != set(net.conditions):
        raise PreconditionError("labeling domain must equal the net's condition set")
    for b, label in labeling.items():
        if isinstance(label, bool) or not isinstance(label, int) or label < 0:
            raise PreconditionError(f"label of condition {b!r} must be a nonnegative integer")
    if len(set(labeling.values())) != len(labeling):
        raise PreconditionError("labeling must be injective")


def _unique_ids(candidates):
    """Deterministically rename later duplicates with '#2', '#3', ... suffixes."""
    used = set()
    out = []
    for cand in candidates:
        name, k = cand, 2
        while name in used:
            name = f"{cand}#{k}"
            k += 1
        used.add(name)
        out.append(name)
    return out


def product(n1: PetriNet, n2: PetriNet) -> PetriNet:
    """Synchronization product of two nets.

    Conditions are the tagged disjoint union ("L:"/"R:" prefixes).
    Events are all pairs (e1, e2) with either side allowed to idle,
    except the fully idle pair, which remains the implicit idle event
    of the result; so |events| = |E1|*|E2| + |E1| + |E2|.
    """
    conditions = [f"L:{b}" for b in n1.conditions] + [f"R:{b}" for b in n2.conditions]
    pair_ids = []
    pair_events = []
    for e1 in list(n1.events) + [None]:
        for e2 in [None] + list(n2.events):
            if e1 is None and e2 is None:
                continue
            pair_ids.append(f"({e1.id if e1 else '*'},{e2.id if e2 else '*'})")
            pre = {f"L:{b}" for b in e1.pre} if e1 else set()
            post = {f"L:{b}" for b in e1.post} if e1 else set()
            if e2:
                pre |= {f"R:{b}" for b in e2.pre}
                post |= {f"R:{b}" for b in e2.post}
            pair_events.append((pre, post))
    events = [
        Event(name, pre, post)
        for name, (pre, post) in zip(_unique_ids(pair_ids), pair_events)
    ]
    return PetriNet(conditions, events)


def attach(n1: PetriNet, l1: Labeling, n2: PetriNet, l2: Labeling):
    """Glue two labeled nets along equally-labeled conditions.

    Conditions are the disjoint union quotiented by equal labels (a
    merged class keeps the first net's id); events are those of both
    nets plus one fresh event with empty pre and post.  Returns the
    resulting net together with its inherited labeling.
    """
    check_labeling(n1, l1)
    check_labeling(n2, l2)
    left_by_label = {label: b for b, label in l1.items()}
    right_map = {}  # right condition id -> id of its class in the result
    fresh = []
    for b2 in sorted(n2.conditions):
        if l2[b2] in left_by_label:
            right_map[b2] = left_by_label[l2[b2]]
        else:
            fresh.append(b2)
    fresh_ids = _unique_ids(sorted(n1.conditions) + fresh)[len(n1.conditions):]
    right_map.update(zip(fresh, fresh_ids))

    event_ids = _unique_ids([e.id for e in n1.events] + [e.id for e in n2.events] + ["star"])
    events = [
        Event(name, event.pre, event.post)
        for name, event in zip(event_ids, n1.events)
    ]
    for name, event in zip(event_ids[len(n1.events):], n2.events):
        events.append(Event(name, {right_map[b] for b in event.pre},
                            {right_map[b] for b in event.post}))
    events.append(Event(event_ids[-1]))

    labeling = {b: label for b, label in l1.items()}
    labeling.update({right_map[b]: label for b, label in l2.items()})
    net = PetriNet(set(n1.conditions) | set(right_map.values()), events)
    return net, labeling


def _condition_signature(net, b):
    """Isomorphism-invariant fingerprint of one condition: the sorted
    (|pre|, |post|) profiles of the events it feeds and is fed by."""
    as_pre = sorted((len(e.pre), len(e.post)) for e in net.events if b in e.pre)
    as_post = sorted((len(e.pre), len(e.post)) for e in net.events if b in e.post)
    return tuple(as_pre), tuple(as_post)


def _match_events(n1, n2, beta):
    pool = defaultdict(list)
    for event in n2.events:
        pool[(event.pre, event.post)].append(event.id)
    eta = {}
    for event in n1.events:
        key = (frozenset(beta[b] for b in event.pre),
               frozenset(beta[b] for b in event.post))
        bucket = pool.get(key)
        if not bucket:
            return None
        eta[event.id] = bucket.pop(0)
    return eta


def are_isomorphic(n1: PetriNet, n2: PetriNet) -> Optional[tuple[dict, dict]]:
    """Search for an isomorphism; return witness maps or ``None``.

    A witness is a pair (beta, eta): a condition bijection and an event
    bijection with beta(pre(e)) = pre(eta(e)) and likewise for post.
    Backtracking over condition assignments, pruned by per-condition
    degree signatures; events are matched by multiset at the leaves.
    """
    if len(n1.conditions) != len(n2.conditions) or len(n1.events) != len(n2.events):
        return None
    sig1 = {b: _condition_signature(n1, b) for b in n1.conditions}
    sig2 = {b: _condition_signature(n2, b) for b in n2.conditions}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None
    candidates = defaultdict(list)
    for b2 in sorted(n2.conditions):
        candidates[sig2[b2]].append(b2)
    order = sorted(n1.conditions, key=lambda b: (len(candidates[sig1[b]]), b))

    beta, used = {}, set()

    def extend(k):
        if k == len(order):
            return _match_events(n1, n2, beta)
        b1 = order[k]
        for b2 in candidates[sig1[b1]]:
            if b2 in used:
                continue
            beta[b1] = b2
            used.add(b2)
            eta = extend(k + 1)
            if eta is not None:
                return eta
            del beta[b1]
            used.discard(b2)
        return None

    eta = extend(0)
    if eta is None:
        return None
    return dict(beta), eta


def _dot_name(token):
    escaped = token.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(net: PetriNet) -> str:
    """Graphviz DOT text: circle nodes for conditions, boxes for events,
    arcs pre->event and event->post, everything in sorted-id order."""
    lines = ["digraph net {"]
    for b in sorted(net.conditions):
        lines.append(f"  {_dot_name(b)} [shape=circle];")
    events = sorted(net.events, key=lambda e: e.id)
    for event in events:
        lines.append(f"  {_dot_name(event.id)} [shape=box];")
    for event in events:
        for b in sorted(event.pre):
            lines.append(f"  {_dot_name(b)} -> {_dot_name(event.id)};")
        for b in sorted(event.post):
            lines.append(f"  {_dot_name(event.id)} -> {_dot_name(b)};")
    lines.append("}")
    return "\n".join(lines)


def net_document(net: PetriNet, labeling: Optional[Labeling] = None) -> dict:
    """JSON-ready dict for a net, with labels when a labeling is given."""
    conditions = []
    for b in sorted(net.conditions):
        entry = {"id": b}
        if labeling is not None:
            entry["label"] = labeling[b]
        conditions.append(entry)
    events = [
        {"id": e.id, "pre": sorted(e.pre), "post": sorted(e.post)} for e in net.events
    ]
    return {"conditions": conditions, "events": events}


def write_net(net: PetriNet, labeling: Optional[Labeling] = None) -> str:
    """Serialize a net (and optional labeling) as the JSON document format."""
    if labeling is not None:
        check_labeling(net, labeling)
    return json.dumps(net_document(net, labeling), indent=2)


def _require(condition, message):
    if not condition:
        raise NetStructureError(message)


def read_net(text: str):
    """Parse the JSON net document; return (net, labeling or None).

    Labels are all-or-none across conditions and must be distinct
    naturals.  Duplicate ids and references to unknown conditions are
    rejected here, so every net this returns passes :func:`validate`
    without hard errors.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    _require(isinstance(doc, dict), "net document must be a JSON object")
    for key in ("conditions", "events"):
        _require(key in doc, f"net document is missing {key!r}")
        _require(isinstance(doc[key], list), f"{key!r} must be an array")

    condition_ids = []
    labels = {}
    for entry in doc["conditions"]:
        _require(isinstance(entry, dict), "each condition must be an object")
        b = entry.get("id")
        _require(isinstance(b, str), "condition id must be a string")
        _require(b not in condition_ids, f"duplicate condition id {b!r}")
        condition_ids.append(b)
        if "label" in entry:
            label = entry["label"]
            _require(
                isinstance(label, int) and not isinstance(label, bool) and label >= 0,
                f"label of {b!r} must be a nonnegative integer",
            )
            labels[b] = label
    if labels and len(labels) != len(condition_ids):
        raise NetStructureError("either all conditions carry labels or none do")
    if len(set(labels.values())) != len(labels):
        raise NetStructureError("condition labels must be distinct")

    events = []
    event_ids = set()
    for entry in doc["events"]:
        _require(isinstance(entry, dict), "each event must be an object")
        e = entry.get("id")
        _require(isinstance(e, str), "event id must be a string")
        _require(e not in event_ids, f"duplicate event id {e!r}")
        event_ids.add(e)
        sides = {}
        for side in ("pre", "post"):
            refs = entry.get(side)
            _require(isinstance(refs, list), f"event {e!r} needs a {side!r} array")
            for b in refs:
                _require(isinstance(b, str), f"event {e!r}: {side} entries must be strings")
                _require(
                    b in condition_ids,
                    f"event {e!r} references unknown condition {b!r}",
                )
            sides[side] = refs
        events.append(Event(e, sides["pre"], sides["post"]))

    return PetriNet(condition_ids, events), (labels or None)
