"""Write the Picard-number certificate to a JSON file and print the conclusion."""

import argparse

from quintic75.certificate import CertificateOptions, certificate_json, run_certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="certificate.json")
    ap.add_argument("--primes", type=int, nargs="+", default=[19, 23])
    ap.add_argument("--cache")
    args = ap.parse_args()
    cert = run_certificate(CertificateOptions(primes=tuple(args.primes), cache=args.cache))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(certificate_json(cert) + "\n")
    print(cert["conclusion"]["statement"])
    print(f"index of M' in NS: {cert['ns_index']['index']['form']}")
    print(f"written to {args.out}")


if __name__ == "__main__":
    main()
