"""Rewrite the generated corpus files (XML, DOT and, for edge-list programs, assertions.df).

assertions.cf is hand-written and never touched.  Review the diff before
committing: a snapshot change is a behaviour change.

    python tools/refresh_corpus.py [NAME ...]
"""
import sys

from flowgraphs.corpus import load_corpus, snapshots


def main(names):
    for program in load_corpus():
        if names and program.name not in names:
            continue
        for filename, text in snapshots(program).items():
            (program.path / filename).write_text(text, encoding="utf-8")
        print(f"refreshed {program.name}")


if __name__ == "__main__":
    main(sys.argv[1:])
