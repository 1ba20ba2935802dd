#!/usr/bin/env python3
# Copyright 2026 The Clash Authors
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
"""Regenerates core/src/unicode_tables.inc from Python's unicodedata."""

import sys
import unicodedata

LICENSE = """\
// Copyright 2026 The Clash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
"""

WHITE_SPACE = [(0x09, 0x0D), (0x20, 0x20), (0x85, 0x85), (0xA0, 0xA0),
               (0x1680, 0x1680), (0x2000, 0x200A), (0x2028, 0x2029),
               (0x202F, 0x202F), (0x205F, 0x205F), (0x3000, 0x3000)]


def ranges(pred):
    out, start = [], None
    for cp in range(0x110000):
        hit = pred(cp)
        if hit and start is None:
            start = cp
        elif not hit and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def main(path):
    punct = ranges(lambda cp: unicodedata.category(chr(cp)).startswith("P"))
    lower = []
    for cp in range(0x110000):
        ch = chr(cp)
        # str.lower applies the full mapping; the simple mapping is its first
        # code point (U+0130 is the only unconditional multi-character case).
        lo = ch.lower()[:1]
        if lo != ch:
            lower.append((cp, ord(lo)))
    with open(path, "w", encoding="utf-8") as f:
        f.write(LICENSE + "\n")
        f.write("// Generated by tools/gen_unicode_tables.py from Unicode %s. Do not edit.\n\n"
                % unicodedata.unidata_version)
        f.write("constexpr CodepointRange kWhiteSpace[] = {\n")
        for a, b in WHITE_SPACE:
            f.write("    {0x%04X, 0x%04X},\n" % (a, b))
        f.write("};\n\nconstexpr CodepointRange kPunctuation[] = {\n")
        for a, b in punct:
            f.write("    {0x%04X, 0x%04X},\n" % (a, b))
        f.write("};\n\nconstexpr CaseMapping kLowercase[] = {\n")
        for a, b in lower:
            f.write("    {0x%04X, 0x%04X},\n" % (a, b))
        f.write("};\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "core/src/unicode_tables.inc")
