"""Command-line front end for desk experiments.

One subcommand per operation; all file formats match the library's text
formats so any emitting invocation can be fed back to its inverse in a
fresh process.  `--seed N` pins every randomized command to a reproducible
stream; without it, OS entropy is used.  Exit codes: 0 success, 1 domain
error, 2 usage error, 3 failed signature verification.
"""

from __future__ import annotations

import argparse
import contextlib
import random
import sys
from pathlib import Path

from . import bigmod, classical, dh, ecc, envelope, numtheory, rsa, sha1


def demo_rsa_paper() -> str:
    """Worked single-letter example: p=19, q=17, e=17, letter C coded as 3.

    Letters are coded by alphabet position (A=1 ... Z=26) for this demo
    only; real message framing uses the byte-block format.
    """
    pub, priv = rsa.keygen_from_primes(19, 17, 17)
    letter = "C"
    coded = ord(letter) - ord("A") + 1
    cipher = rsa.encrypt_block(coded, pub)
    decoded = rsa.decrypt_block(cipher, priv)
    lines = [
        f"p={priv.p}",
        f"q={priv.q}",
        f"N={pub.n}",
        f"phi={priv.phi}",
        f"e={pub.e}",
        f"d={priv.d}",
        f"letter={letter}",
        f"coded={coded}",
        f"cipher={cipher}",
        f"decoded={decoded}",
        f"recovered-letter={chr(ord('A') + decoded - 1)}",
    ]
    return "\n".join(lines) + "\n"


def _fmt(n: int, hexadecimal: bool) -> str:
    return bigmod.render_natural(n, hexadecimal)


def _make_rng(seed: int | None):
    return random.Random(seed) if seed is not None else random.SystemRandom()


def _read_bytes(path: str | None, stdin) -> bytes:
    if path and path != "-":
        return Path(path).read_bytes()
    data = stdin.read()
    return data.encode() if isinstance(data, str) else data


def _read_text(path: str | None, stdin) -> str:
    return _read_bytes(path, stdin).decode()


def _write_bytes(data: bytes, path: str | None, stdout) -> None:
    if path and path != "-":
        Path(path).write_bytes(data)
    elif hasattr(stdout, "buffer"):
        stdout.buffer.write(data)
    else:
        stdout.write(data.decode("latin-1"))


def _write_text(text: str, path: str | None, stdout) -> None:
    if path and path != "-":
        Path(path).write_text(text)
    else:
        stdout.write(text)


def _add_base_selector(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--hex", action="store_true", help="print numbers as 0x hex")
    group.add_argument("--dec", action="store_false", dest="hex",
                       help="print numbers in decimal (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="toycrypt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate an RSA key pair")
    p.add_argument("--bits", type=int, required=True)
    p.add_argument("--exponent", type=int, default=rsa.DEFAULT_PUBLIC_EXPONENT)
    p.add_argument("--out", required=True, help="prefix for .pub and .key files")
    p.add_argument("--seed", type=int)

    for name, help_text in (
        ("encrypt", "RSA-encrypt bytes with a public key"),
        ("decrypt", "RSA-decrypt a block stream with a private key"),
        ("seal", "hybrid-encrypt for a recipient public key"),
        ("open", "open a hybrid envelope with a private key"),
        ("sign", "sign bytes with a private key"),
        ("verify", "verify a signed message with a public key"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--key", required=True)
        p.add_argument("--in", dest="infile")
        if name != "verify":
            p.add_argument("--out", dest="outfile")
        if name == "seal":
            p.add_argument("--seed", type=int)

    p = sub.add_parser("dh-demo", help="full Alice/Bob/Eve key-agreement transcript")
    p.add_argument("--p", type=int, default=23)
    p.add_argument("--g", type=int, default=5)
    p.add_argument("--seed", type=int)
    p.add_argument("--cap", type=int, help="Eve's scan budget (default p)")

    p = sub.add_parser("dlog", help="brute-force discrete log")
    p.add_argument("p", type=int)
    p.add_argument("g", type=int)
    p.add_argument("target", type=int)
    p.add_argument("--cap", type=int)
    _add_base_selector(p)

    p = sub.add_parser("factor", help="trial-division factorization")
    p.add_argument("n", type=bigmod.parse_natural)
    _add_base_selector(p)

    p = sub.add_parser("primes", help="primes below a limit")
    p.add_argument("limit", type=int)
    _add_base_selector(p)

    p = sub.add_parser("totient", help="Euler's phi")
    p.add_argument("n", type=bigmod.parse_natural)
    _add_base_selector(p)

    p = sub.add_parser("prime-count", help="approximate prime counts, x/ln(x)")
    p.add_argument("bounds", type=bigmod.parse_natural, nargs="+",
                   help="X, or LO HI for the count between them")

    p = sub.add_parser("hash", help="SHA-1 of stdin or a file")
    p.add_argument("--in", dest="infile")

    p = sub.add_parser("caesar", help="Caesar shift cipher")
    p.add_argument("--shift", type=int, required=True)
    p.add_argument("--decrypt", action="store_true")
    p.add_argument("text", nargs="?")

    p = sub.add_parser("scytale", help="scytale transposition cipher")
    p.add_argument("--key", type=int, required=True, help="rod circumference")
    p.add_argument("--decrypt", action="store_true")
    p.add_argument("text", nargs="?")

    p = sub.add_parser("otp", help="one-time-pad XOR")
    p.add_argument("--key-file", required=True)
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", dest="outfile")

    p = sub.add_parser("ecc", help="elliptic-curve point arithmetic")
    p.add_argument("--curve", required=True, help="a,b,p")
    ecc_sub = p.add_subparsers(dest="ecc_op", required=True)
    q = ecc_sub.add_parser("add")
    q.add_argument("point1")
    q.add_argument("point2")
    q = ecc_sub.add_parser("mul")
    q.add_argument("k", type=bigmod.parse_natural)
    q.add_argument("point")
    q = ecc_sub.add_parser("dlog")
    q.add_argument("base")
    q.add_argument("target")
    q.add_argument("--cap", type=int)

    p = sub.add_parser("keycount", help="pairwise keys needed by N parties")
    p.add_argument("n", type=int)
    _add_base_selector(p)

    sub.add_parser("rsa-demo", help="replay the worked RSA example")

    return parser


def _cmd_keygen(args, stdin, stdout, rng) -> int:
    pub, priv = rsa.keygen_random(args.bits, args.exponent, rng)
    Path(args.out + ".pub").write_text(rsa.write_public_key(pub))
    Path(args.out + ".key").write_text(rsa.write_private_key(priv))
    return 0


def _cmd_encrypt(args, stdin, stdout, rng) -> int:
    pub = rsa.read_public_key(Path(args.key).read_text())
    stream = rsa.encrypt_message(_read_bytes(args.infile, stdin), pub)
    _write_text(rsa.write_block_stream(stream), args.outfile, stdout)
    return 0


def _cmd_decrypt(args, stdin, stdout, rng) -> int:
    priv = rsa.read_private_key(Path(args.key).read_text())
    stream = rsa.read_block_stream(_read_text(args.infile, stdin))
    _write_bytes(rsa.decrypt_message(stream, priv), args.outfile, stdout)
    return 0


def _cmd_seal(args, stdin, stdout, rng) -> int:
    pub = rsa.read_public_key(Path(args.key).read_text())
    env = envelope.seal(_read_bytes(args.infile, stdin), pub, rng)
    _write_text(envelope.write_envelope(env), args.outfile, stdout)
    return 0


def _cmd_open(args, stdin, stdout, rng) -> int:
    priv = rsa.read_private_key(Path(args.key).read_text())
    env = envelope.read_envelope(_read_text(args.infile, stdin))
    _write_bytes(envelope.open_envelope(env, priv), args.outfile, stdout)
    return 0


def _cmd_sign(args, stdin, stdout, rng) -> int:
    priv = rsa.read_private_key(Path(args.key).read_text())
    msg = envelope.sign(_read_bytes(args.infile, stdin), priv)
    _write_bytes(envelope.write_signed(msg), args.outfile, stdout)
    return 0


def _cmd_verify(args, stdin, stdout, rng) -> int:
    pub = rsa.read_public_key(Path(args.key).read_text())
    msg = envelope.read_signed(_read_bytes(args.infile, stdin))
    if envelope.verify(msg, pub):
        stdout.write("VALID\n")
        return 0
    stdout.write("INVALID\n")
    return 3


def _cmd_dh_demo(args, stdin, stdout, rng) -> int:
    params = dh.make_params(args.p, args.g)
    alice = dh.gen_keypair(params, rng)
    bob = dh.gen_keypair(params, rng)
    alice_shared = dh.shared_secret(params, alice.secret, bob.public)
    bob_shared = dh.shared_secret(params, bob.secret, alice.public)
    cap = args.cap if args.cap is not None else params.p
    eve = dh.brute_force_dlog(params, alice.public, cap)
    lines = [
        f"p={params.p}",
        f"g={params.g}",
        f"alice-secret={alice.secret}",
        f"alice-public={alice.public}",
        f"bob-secret={bob.secret}",
        f"bob-public={bob.public}",
        f"alice-shared={alice_shared}",
        f"bob-shared={bob_shared}",
        f"eve-exponent={eve.exponent if eve.found else 'not-found'}",
        f"eve-steps={eve.steps}",
    ]
    if eve.found:
        lines.append(f"eve-shared={dh.shared_secret(params, eve.exponent, bob.public)}")
    stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_dlog(args, stdin, stdout, rng) -> int:
    params = dh.make_params(args.p, args.g)
    cap = args.cap if args.cap is not None else params.p
    result = dh.brute_force_dlog(params, args.target, cap)
    if not result.found:
        raise ValueError(f"no exponent up to {cap} reaches {args.target}")
    stdout.write(f"k={_fmt(result.exponent, args.hex)} steps={result.steps}\n")
    return 0


def _cmd_factor(args, stdin, stdout, rng) -> int:
    f = numtheory.factor_trial(args.n)
    stdout.write(f"{_fmt(args.n, args.hex)} = {f}\n")
    return 0


def _cmd_primes(args, stdin, stdout, rng) -> int:
    for p in numtheory.sieve_primes(args.limit):
        stdout.write(_fmt(p, args.hex) + "\n")
    return 0


def _cmd_totient(args, stdin, stdout, rng) -> int:
    stdout.write(_fmt(numtheory.totient(args.n), args.hex) + "\n")
    return 0


def _cmd_prime_count(args, stdin, stdout, rng) -> int:
    if len(args.bounds) == 1:
        estimate = numtheory.pnt_estimate(args.bounds[0])
    elif len(args.bounds) == 2:
        estimate = numtheory.pnt_between(args.bounds[0], args.bounds[1])
    else:
        raise ValueError("prime-count takes one or two bounds")
    stdout.write(f"{estimate:.6g}\n")
    return 0


def _cmd_hash(args, stdin, stdout, rng) -> int:
    digest = sha1.sha1(_read_bytes(args.infile, stdin))
    stdout.write(sha1.hex_upper(digest) + "\n")
    return 0


def _read_cli_text(args, stdin) -> str:
    if args.text is not None:
        return args.text
    return _read_text(None, stdin).removesuffix("\n")


def _cmd_caesar(args, stdin, stdout, rng) -> int:
    text = _read_cli_text(args, stdin)
    op = classical.caesar_decrypt if args.decrypt else classical.caesar_encrypt
    stdout.write(op(text, args.shift) + "\n")
    return 0


def _cmd_scytale(args, stdin, stdout, rng) -> int:
    text = _read_cli_text(args, stdin)
    if args.decrypt:
        stdout.write(classical.scytale_unframe(text) + "\n")
    else:
        stdout.write(classical.scytale_frame(text, args.key) + "\n")
    return 0


def _cmd_otp(args, stdin, stdout, rng) -> int:
    key = Path(args.key_file).read_bytes()
    data = _read_bytes(args.infile, stdin)
    _write_bytes(classical.otp_apply(data, key), args.outfile, stdout)
    return 0


def _cmd_ecc(args, stdin, stdout, rng) -> int:
    try:
        a, b, p = (int(part) for part in args.curve.split(","))
    except ValueError:
        raise ValueError(f"--curve expects 'a,b,p', got {args.curve!r}") from None
    curve = ecc.make_curve(a, b, p)
    if args.ecc_op == "add":
        result = ecc.point_add(curve, ecc.parse_point(args.point1), ecc.parse_point(args.point2))
        stdout.write(ecc.render_point(result) + "\n")
    elif args.ecc_op == "mul":
        result = ecc.scalar_mul(curve, args.k, ecc.parse_point(args.point))
        stdout.write(ecc.render_point(result) + "\n")
    else:
        base = ecc.parse_point(args.base)
        target = ecc.parse_point(args.target)
        cap = args.cap if args.cap is not None else curve.p + 1
        result = ecc.brute_force_ecdlog(curve, base, target, cap)
        if not result.found:
            raise ValueError(f"no scalar up to {cap} reaches {args.target}")
        stdout.write(f"k={result.scalar} steps={result.steps}\n")
    return 0


def _cmd_keycount(args, stdin, stdout, rng) -> int:
    stdout.write(_fmt(numtheory.key_count(args.n), args.hex) + "\n")
    return 0


def _cmd_rsa_demo(args, stdin, stdout, rng) -> int:
    stdout.write(demo_rsa_paper())
    return 0


_HANDLERS = {
    "keygen": _cmd_keygen,
    "encrypt": _cmd_encrypt,
    "decrypt": _cmd_decrypt,
    "seal": _cmd_seal,
    "open": _cmd_open,
    "sign": _cmd_sign,
    "verify": _cmd_verify,
    "dh-demo": _cmd_dh_demo,
    "dlog": _cmd_dlog,
    "factor": _cmd_factor,
    "primes": _cmd_primes,
    "totient": _cmd_totient,
    "prime-count": _cmd_prime_count,
    "hash": _cmd_hash,
    "caesar": _cmd_caesar,
    "scytale": _cmd_scytale,
    "otp": _cmd_otp,
    "ecc": _cmd_ecc,
    "keycount": _cmd_keycount,
    "rsa-demo": _cmd_rsa_demo,
}


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    rng = _make_rng(getattr(args, "seed", None))
    try:
        return _HANDLERS[args.command](args, stdin, stdout, rng)
    except (ValueError, OSError) as exc:
        stderr.write(f"toycrypt {args.command}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:], stdin=sys.stdin.buffer))
