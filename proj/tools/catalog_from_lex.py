#!/usr/bin/env python3
# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Converts catalog lines whose signs are in lexicographic basis order to the
colexicographic order read by hkom.

Input lines: "[id] n r signs" with signs over {+,-,0}. Blank lines and lines
starting with '#' pass through unchanged. Other upstream formats (for example
chirotopes written with 'x'/'o' or with a different alphabet) should be mapped
to this one first.
"""

import argparse
import itertools
import sys


def lex_to_colex(n, r, signs):
    lex = list(itertools.combinations(range(n), r))
    if len(signs) != len(lex):
        raise ValueError(f"expected {len(lex)} signs, got {len(signs)}")
    by_basis = dict(zip(lex, signs))
    colex = sorted(lex, key=lambda b: tuple(reversed(b)))
    return "".join(by_basis[b] for b in colex)


def convert(line):
    stripped = line.strip()
    if not stripped or stripped.startswith("#"):
        return line.rstrip("\n")
    tokens = stripped.split()
    head = tokens[:-3]
    n, r, signs = int(tokens[-3]), int(tokens[-2]), tokens[-1]
    return " ".join(head + [str(n), str(r), lex_to_colex(n, r, signs)])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("input", type=argparse.FileType("r"), nargs="?", default=sys.stdin)
    args = parser.parse_args()
    for number, line in enumerate(args.input, 1):
        try:
            print(convert(line))
        except (ValueError, IndexError) as e:
            sys.exit(f"line {number}: {e}")


if __name__ == "__main__":
    main()
