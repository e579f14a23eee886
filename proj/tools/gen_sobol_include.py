#!/usr/bin/env python3
"""Render data/sobol_joe_kuo.txt as a C++ include (kSobolRows)."""
import sys


def main() -> int:
    src, dst = sys.argv[1], sys.argv[2]
    rows = []
    for line in open(src):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        fields = [int(x) for x in line.split()]
        dim, s, a, ms = fields[0], fields[1], fields[2], fields[3:]
        assert len(ms) == s and dim == len(rows) + 2
        assert s <= 18, "SobolRow.m holds at most 18 entries"
        rows.append((s, a, ms))

    with open(dst, 'w') as out:
        out.write('// Generated by tools/gen_sobol_include.py from data/sobol_joe_kuo.txt.\n')
        out.write(f'constexpr int kSobolRowCount = {len(rows)};\n')
        out.write('constexpr SobolRow kSobolRows[kSobolRowCount] = {\n')
        for s, a, ms in rows:
            m_str = ', '.join(str(m) for m in ms)
            out.write(f'    {{{s}u, {a}u, {{{m_str}}}}},\n')
        out.write('};\n')
    return 0


if __name__ == '__main__':
    sys.exit(main())
