"""Command-line front end: single-prime queries, range sweeps, certificates.

Exit codes: 0 on success, 2 when the input violates a theorem hypothesis
(composite, out of range, or wrong residue class), 1 on internal errors and
oracle mismatches.  Sweeps emit one record per qualifying (prime, form) pair
in ascending order; with --json each record is a single line of JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .errors import ReductionFailure
from .halfplane import INVERT, ReductionResult, Shift, apply, replay
from .modarith import MAX_PRIME, Prime, Witness, WitnessKind, is_prime
from .oracle import all_representations
from .psl2z import EllipticVariant, UnimodularMatrix, fixed_point, make_elliptic
from .theorems import Certificate, Representation, one_three, two_squares, verify_certificate

FORM_NAMES = {1: "x2+y2", 3: "x2+3y2"}


@dataclass(frozen=True)
class OutputRecord:
    """One emitted result; certificate is the serialized form when requested."""

    p: int
    form: str
    X: int
    Y: int
    verified: bool
    certificate: str | None = None


def _matrix_entries(matrix: UnimodularMatrix) -> list[int]:
    return list(matrix.entries())


def certificate_to_dict(cert: Certificate) -> dict:
    word = [{"shift": step.n} if isinstance(step, Shift) else "invert" for step in cert.reduction.word]
    return {
        "p": cert.p.value,
        "m": cert.witness.m,
        "base": cert.witness.base,
        "exponent": cert.witness.exponent,
        "elliptic": {
            "variant": cert.elliptic.variant.value,
            "m": cert.elliptic.m,
            "s": cert.elliptic.s,
            "r": cert.elliptic.r,
            "matrix": _matrix_entries(cert.elliptic.matrix),
        },
        "word": word,
        "U": _matrix_entries(cert.reduction.U),
        "T": _matrix_entries(cert.T),
        "c": cert.extracted_c,
        "d": cert.extracted_d,
        "X": cert.representation.X,
        "Y": cert.representation.Y,
        "form": FORM_NAMES[cert.representation.k],
    }


def serialize_certificate(cert: Certificate) -> str:
    """One compact JSON object per certificate; see deserialize_certificate."""
    return json.dumps(certificate_to_dict(cert), separators=(",", ":"))


def _matrix_from(entries: list[int]) -> UnimodularMatrix:
    a, b, c, d = entries
    return UnimodularMatrix(a, b, c, d)


def deserialize_certificate(text: str) -> Certificate:
    """Rebuild a Certificate, re-deriving what the wire format leaves implicit.

    Raises ValueError when the serialized pieces do not replay consistently.
    """
    data = json.loads(text)
    form = data["form"]
    if form not in FORM_NAMES.values():
        raise ValueError(f"unknown form tag {form!r}")
    k = 1 if form == FORM_NAMES[1] else 3
    prime = Prime(data["p"])
    kind = WitnessKind.SQRT_MINUS_ONE if k == 1 else WitnessKind.CUBE_ROOT_NONTRIVIAL
    witness = Witness(m=data["m"], kind=kind, base=data["base"], exponent=data["exponent"])
    raw = data["elliptic"]
    element = make_elliptic(EllipticVariant(raw["variant"]), raw["m"], raw["s"])
    if element.r != raw["r"] or element.matrix != _matrix_from(raw["matrix"]):
        raise ValueError("serialized elliptic element does not replay")
    word = []
    for step in data["word"]:
        if step == "invert":
            word.append(INVERT)
        elif isinstance(step, dict) and set(step) == {"shift"}:
            word.append(Shift(step["shift"]))
        else:
            raise ValueError(f"unknown reduction step {step!r}")
    u = _matrix_from(data["U"])
    if replay(word) != u:
        raise ValueError("serialized word does not replay to U")
    reduction = ReductionResult(
        reduced=apply(u, fixed_point(element)), U=u, word=tuple(word), step_count=len(word)
    )
    return Certificate(
        p=prime,
        witness=witness,
        elliptic=element,
        reduction=reduction,
        T=_matrix_from(data["T"]),
        extracted_c=data["c"],
        extracted_d=data["d"],
        representation=Representation(X=data["X"], Y=data["Y"], k=k, p=prime),
    )


def _record_for(cert: Certificate, with_certificate: bool) -> OutputRecord:
    rep = cert.representation
    return OutputRecord(
        p=cert.p.value,
        form=FORM_NAMES[rep.k],
        X=rep.X,
        Y=rep.Y,
        verified=verify_certificate(cert),
        certificate=serialize_certificate(cert) if with_certificate else None,
    )


def _emit(record: OutputRecord, args: argparse.Namespace) -> None:
    if args.quiet:
        return
    if args.json:
        payload = {
            "p": record.p,
            "form": record.form,
            "X": record.X,
            "Y": record.Y,
            "verified": record.verified,
        }
        if record.certificate is not None:
            payload["certificate"] = json.loads(record.certificate)
        print(json.dumps(payload, separators=(",", ":")))
        return
    if record.form == FORM_NAMES[1]:
        print(f"{record.p} = {record.X}^2 + {record.Y}^2")
    else:
        print(f"{record.p} = {record.X}^2 + 3*{record.Y}^2")
    if record.certificate is not None:
        print(record.certificate)


def _oracle_matches(cert: Certificate) -> bool:
    rep = cert.representation
    expected = all_representations(cert.p.value, rep.k).pairs
    return expected == {(rep.X, rep.Y)}


def _check_hypothesis(n: int, form: int) -> str | None:
    """Error text when n fails the residue-class hypothesis of the given form."""
    if form == 1 and n % 4 != 1:
        return f"{n} ≡ {n % 4} (mod 4): hypothesis of Theorem A not met"
    if form == 3 and n % 3 != 1:
        return f"{n} ≡ {n % 3} (mod 3): hypothesis of Theorem B not met"
    return None


def _process(n: int, form: int, args: argparse.Namespace) -> tuple[int, bool]:
    """Run one pipeline; returns (exit_code, oracle_ok)."""
    cert = two_squares(n) if form == 1 else one_three(n)
    record = _record_for(cert, args.certificate)
    _emit(record, args)
    if not record.verified:
        print(f"internal error: certificate for {n} failed verification", file=sys.stderr)
        return 1, True
    if args.verify and not _oracle_matches(cert):
        print(f"oracle mismatch for {n} ({FORM_NAMES[form]})", file=sys.stderr)
        return 0, False
    return 0, True


def _run_single(args: argparse.Namespace, form: int) -> int:
    try:
        prime = Prime(args.p)
    except ValueError as exc:
        print(f"{exc}: Theorems A and B apply to primes in (2, 2^40) only", file=sys.stderr)
        return 2
    message = _check_hypothesis(prime.value, form)
    if message is not None:
        print(message, file=sys.stderr)
        return 2
    try:
        code, oracle_ok = _process(prime.value, form, args)
    except ReductionFailure as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if code != 0:
        return code
    return 0 if oracle_ok else 1


def _run_sweep(args: argparse.Namespace) -> int:
    if args.lo < 0 or args.hi < args.lo:
        print(f"empty or negative range [{args.lo}, {args.hi}]", file=sys.stderr)
        return 2
    if args.hi >= MAX_PRIME:
        print(f"range end must stay below 2^40, got {args.hi}", file=sys.stderr)
        return 2
    forms = {"both": (1, 3), "1": (1,), "3": (3,)}[args.form]
    all_ok = True
    for n in range(max(args.lo, 3), args.hi + 1):
        if not is_prime(n):
            continue
        for form in forms:
            if _check_hypothesis(n, form) is not None:
                continue
            try:
                code, oracle_ok = _process(n, form, args)
            except ReductionFailure as exc:
                print(f"internal error: {exc}", file=sys.stderr)
                return 1
            if code != 0:
                return code
            all_ok = all_ok and oracle_ok
    return 0 if all_ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermatrep",
        description="Represent primes as X^2 + Y^2 (p = 1 mod 4) or X^2 + 3Y^2 (p = 1 mod 3).",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record per line")
    common.add_argument("--certificate", action="store_true", help="include the replayable certificate")
    common.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    common.add_argument("--quiet", action="store_true", help="suppress result records on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    two = sub.add_parser("two-squares", parents=[common], help="p = X^2 + Y^2 for p = 1 (mod 4)")
    two.add_argument("p", type=int)
    one = sub.add_parser("one-three", parents=[common], help="p = X^2 + 3Y^2 for p = 1 (mod 3)")
    one.add_argument("p", type=int)
    sweep = sub.add_parser("sweep", parents=[common], help="all qualifying primes in [lo, hi]")
    sweep.add_argument("lo", type=int)
    sweep.add_argument("hi", type=int)
    sweep.add_argument("--form", choices=("both", "1", "3"), default="both")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "two-squares":
        return _run_single(args, 1)
    if args.command == "one-three":
        return _run_single(args, 3)
    return _run_sweep(args)


if __name__ == "__main__":
    raise SystemExit(main())
