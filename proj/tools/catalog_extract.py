#!/usr/bin/env python3
"""One-time extraction of the operator catalog literals.

Reads the pmatrix/array blocks of the source document at the recorded line
numbers, converts each cell to the polynomial syntax of the library, reads the
structure constants off the linear part of omega and writes catalog_data.cpp.
Kept for audit; the generated file is the source of truth and is checked in.

usage: catalog_extract.py SOURCE.md OUT.cpp
"""
import re
import sys

import sympy as sp

LINES = None


def block(start):
    """Rows of the matrix whose body starts after 1-based line `start`."""
    buf = ''
    i = start
    while True:
        s = LINES[i]
        if re.search(r'\\end\{(pmatrix|array)\}', s):
            buf += re.split(r'\\end\{(?:pmatrix|array)\}', s)[0]
            break
        buf += s + ' '
        i += 1
    if 'begin' in buf:
        buf = re.sub(r'.*\\begin\{(pmatrix|array)\}(\{[^}]*\})?', '', buf)
    rows = [r for r in buf.split('\\\\') if r.strip()]
    return [[conv(c.strip()) for c in r.split('&')] for r in rows]


def conv(c):
    s = c.replace('\\left', '').replace('\\right', '')
    for g in ('alpha', 'beta', 'gamma', 'delta'):
        s = s.replace('\\' + g, g)
    s = re.sub(r'u\^\{?(\d+)\}?', r'u\1', s)
    s = re.sub(r'([fa])\^\{(\d+)\}', r'\1\2', s)
    s = re.sub(r'([fa])\^(\d)', r'\1\2', s)
    s = re.sub(r'g_\{(\d+)\}', r'g\1', s)
    s = re.sub(r'\^\{?(\d+)\}?', r'^\1', s)
    s = re.sub(r'\\frac\{([^{}]*)\}\{([^{}]*)\}', r'(\1)/(\2)', s)
    s = re.sub(r'\s+', ' ', s).strip()
    s = re.sub(r'(\d|\))\s*([a-z(])', r'\1*\2', s)
    s = re.sub(r'([a-z]\d*)\s+([a-z(])', r'\1*\2', s)
    s = re.sub(r'([a-z]\d*)(\()', r'\1*\2', s)
    return s.replace(' ', '')


def generic(n):
    eta = [['a%d%d' % (min(i, j), max(i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)]
    f = [['0' if i == j else ('f%d%d' % (i, j) if i < j else '-f%d%d' % (j, i)) for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    return eta, [f]


# name, algebra, structure, source, eta line, omega block lines
ROWS = [
    ('A_{3,1}', '3n_{1,1}', 'Abelian', 1546, [1552]),
    ('A_{3,2}', 'sl(2,R)', 'Simple', 1562, [1568]),
    ('A_{3,3}', 'so(3,R)', 'Simple', 1580, [1586]),
    ('A_{4,1}', '4n_{1,1}', 'Abelian', 1693, [1700]),
    ('A_{4,2}', 's_{4,6}', 'Solvable', 1714, [1721]),
    ('A_{4,3}', 's_{4,7}', 'Solvable', 1731, [1738]),
    ('A_{4,4}', 'sl(2,R)+n_{1,1}', 'Direct sum', 1755, [1762]),
    ('A_{4,5}', 'so(3,R)+n_{1,1}', 'Direct sum', 1772, [1779]),
    ('A_{5,2}', 'sl(2,R)+2n_{1,1}', 'Direct sum', 1806, [1814]),
    ('A_{5,3}', 'so(3,R)+2n_{1,1}', 'Direct sum', 1825, [1833]),
    ('A_{5,4}', 's_{4,6}+n_{1,1}', 'Direct sum', 1844, [1852]),
    ('A_{5,5}', 's_{4,7}+n_{1,1}', 'Direct sum', 1863, [1871]),
    ('A_{5,6}', 'n_{5,2}', '3-Step Nilpotent', 1886, [1894]),
    ('A_{6,2}', 'sl(2,R)+3n_{1,1}', 'Direct sum', 2197, [2207]),
    ('A_{6,3}', 'so(3,R)+3n_{1,1}', 'Direct sum', 2222, [2233]),
    ('A_{6,4}', 'sl(2,R)+sl(2,R)', 'Direct sum', 2248, [2259, 2269]),
    ('A_{6,5}', 'so(3,R)+so(3,R)', 'Direct sum', 2283, [2294, 2304]),
    ('A_{6,6}', 'sl(2,R)+so(3,R)', 'Direct sum', 2317, [2328, 2338]),
    ('A_{6,7}', 's_{4,6}+2n_{1,1}', 'Direct sum', 2360, [2371]),
    ('A_{6,8}', 's_{4,7}+2n_{1,1}', 'Direct sum', 2386, [2397]),
    ('A_{6,9}', 'n_{5,2}+n_{1,1}', 'Direct sum', 2412, [2422]),
    ('A_{6,10}', 'n_{6,1}', '2-Step Nilpotent', 2440, [2451]),
    ('A_{6,11}', 's_{6,162}', 'Solvable', 2469, [2478]),
    ('A_{6,12}', 's_{6,163}', 'Solvable', 2493, [2502]),
    ('A_{6,13}', 's_{6,164}', 'Solvable', 2517, [2526]),
    ('A_{6,14}', 's_{6,165}', 'Solvable', 2541, [2550, 2559]),
    ('A_{6,15}', 's_{6,166}', 'Solvable', 2574, [2583]),
    ('A_{6,16}', 's_{6,167}', 'Solvable', 2598, [2607]),
    ('A_{6,17}', 'so(1,3,R)', 'Simple', 2625, [2636, 2646]),
    ('A_{6,18}', 'sl(3,R)x3n_{1,1}', 'Levi decomposable', 2660, [2671, 2681]),
    ('sl3', 'sl(3,R)', 'Simple', 746, [762, 789]),
    ('g2', 'g_2', 'Simple', 2112, [2134, 2157]),
]

ORDER = ['A_{2,1}', 'A_{3,1}', 'A_{3,2}', 'A_{3,3}', 'A_{4,1}', 'A_{4,2}', 'A_{4,3}', 'A_{4,4}', 'A_{4,5}',
         'A_{5,1}', 'A_{5,2}', 'A_{5,3}', 'A_{5,4}', 'A_{5,5}', 'A_{5,6}', 'A_{6,1}'] + \
        ['A_{6,%d}' % k for k in range(2, 19)] + ['sl3', 'g2']

# target ("eta" or "omega<b>"), 1-based row, col, printed, corrected
ERRATA = {
    'A_{3,2}': [('omega1', 2, 3, 'u3+f13', 'u3+f23')],
    'A_{6,3}': [('eta', 2, 2, '2*g22', 'g22')],
    'A_{6,4}': [('omega2', 3, 2, '2-f23', '-f23'), ('omega2', 5, 4, '2-f45', '-f45')],
    'A_{6,16}': [('omega1', 2, 4, '-u1*f24', '-u1+f24')],
}

# algebra parameters and the representative values used for numeric invariants
ALGEBRA_PARAMS = {
    'A_{6,11}': [('a', '1/2')],
    'A_{6,13}': [('alpha', '2')],
    'A_{6,14}': [('alpha', '2')],
    'A_{6,15}': [('a', '1/2')],
}

# split g2 commutation relations as listed next to its operator
G2_RELATIONS = r"""
[1,3]=2e3 [1,4]=-3e4 [1,5]=-e5 [1,6]=e6 [1,7]=3e7 [1,9]=-2e9 [1,10]=3e10 [1,11]=e11 [1,12]=-e12 [1,13]=-3e13
[2,3]=-e3 [2,4]=2e4 [2,5]=e5 [2,7]=-e7 [2,8]=e8 [2,9]=e9 [2,10]=-2e10 [2,11]=-e11 [2,13]=e13 [2,14]=-e14
[3,4]=e5 [3,5]=2e6 [3,6]=-3e7 [3,9]=-e1 [3,11]=-3e10 [3,12]=-2e11 [3,13]=e12
[4,7]=-e8 [4,10]=-e2 [4,11]=e9 [4,14]=e13
[5,6]=-3e8 [5,9]=3e4 [5,10]=-e3 [5,11]=-3e2-e1 [5,12]=2e9 [5,14]=e12
[6,9]=2e5 [6,11]=-2e3 [6,12]=-3e2-2e1 [6,13]=-e9 [6,14]=-e11
[7,9]=-e6 [7,12]=e3 [7,13]=-e2-e1 [7,14]=-e10
[8,10]=-e7 [8,11]=-e6 [8,12]=e5 [8,13]=e4 [8,14]=-2e2-e1
[9,10]=e11 [9,11]=2e12 [9,12]=-3e13 [10,13]=-e14 [11,12]=-3e14
"""


def parse_relations(text):
    out = []
    for m in re.finditer(r'\[(\d+),(\d+)\]=(\S+)', text):
        terms = []
        for t in re.finditer(r'([+-]?)(\d*)e(\d+)', m.group(3)):
            coef = (t.group(1) or '') + (t.group(2) or '1')
            terms.append((int(t.group(3)), coef.lstrip('+')))
        out.append((int(m.group(1)), int(m.group(2)), sorted(terms)))
    return out


def sym(s, loc):
    for x in re.findall(r'[A-Za-z_]\w*', s):
        loc.setdefault(x, sp.Symbol(x))
    return sp.sympify(s.replace('^', '**'), locals=loc)


def corrected_omega(name, blocks):
    blocks = [[r[:] for r in b] for b in blocks]
    for tgt, i, j, printed, fixed in ERRATA.get(name, []):
        if tgt.startswith('omega'):
            b = blocks[int(tgt[5:]) - 1]
            assert b[i - 1][j - 1] == printed, (name, b[i - 1][j - 1])
            b[i - 1][j - 1] = fixed
    return blocks


def brackets_from_omega(name, blocks):
    n = len(blocks[0])
    loc = {}
    u = [sp.Symbol('u%d' % (k + 1)) for k in range(n)]
    for k in range(n):
        loc['u%d' % (k + 1)] = u[k]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            w = sp.expand(sum(sym(b[i][j], loc) for b in blocks))
            terms = []
            for k in range(n):
                d = sp.expand(sp.diff(w, u[k]))
                assert not (d.free_symbols & set(u)), (name, i, j)
                if d != 0:
                    terms.append((k + 1, str(d).replace('**', '^').replace(' ', '')))
            if terms:
                out.append((i + 1, j + 1, terms))
    return out


def cpp_str(s):
    return '"' + s + '"'


def cpp_matrix(m, indent):
    pad = ' ' * indent
    rows = [pad + '{' + ', '.join(cpp_str(c) for c in r) + '}' for r in m]
    return '{\n' + ',\n'.join(rows) + '}'


def cpp_brackets(br):
    parts = []
    for i, j, terms in br:
        t = ', '.join('{%d, %s}' % (k, cpp_str(c)) for k, c in terms)
        parts.append('{%d, %d, {%s}}' % (i, j, t))
    return '{' + ', '.join(parts) + '}'


def main():
    global LINES
    LINES = open(sys.argv[1], encoding='utf-8').read().split('\n')
    entries = {}
    eta2, om2 = [['a11', 'a12'], ['a12', 'a22']], [[['0', 'f12'], ['-f12', '0']]]
    entries['A_{2,1}'] = ('2n_{1,1}', 'Abelian', 'dimension 2', eta2, om2)
    entries['A_{5,1}'] = ('5n_{1,1}', 'Abelian', 'dimension 5', *generic(5))
    entries['A_{6,1}'] = ('6n_{1,1}', 'Abelian', 'dimension 6', *generic(6))
    for name, alg, structure, le, lo in ROWS:
        source = {'sl3': 'sl(3) example', 'g2': 'split g2'}.get(name) or 'dimension ' + name[3]
        entries[name] = (alg, structure, source, block(le), [block(x) for x in lo])

    g2_rel = parse_relations(G2_RELATIONS)
    out = ['// Generated once by tools/catalog_extract.py and checked in; edit by hand only to',
           '// fix a transcription, and record every correction as an erratum.',
           '',
           '#include "catalog_data.hpp"',
           '',
           'namespace lieham::detail {',
           '',
           'const std::vector<CatalogSource>& catalog_sources() {',
           '  static const std::vector<CatalogSource> sources{']
    for name in ORDER:
        alg, structure, source, eta, blocks = entries[name]
        n = len(eta)
        assert all(len(r) == n for r in eta), name
        assert all(len(b) == n and all(len(r) == n for r in b) for b in blocks), name
        br = brackets_from_omega(name, corrected_omega(name, blocks))
        if name == 'g2':
            assert sorted(br) == sorted(g2_rel), 'g2 omega disagrees with its relations'
            br = g2_rel
        errata = ', '.join('{%s, %d, %d, %s, %s}' % (cpp_str(t), i, j, cpp_str(p), cpp_str(c))
                           for t, i, j, p, c in ERRATA.get(name, []))
        params = ', '.join('{%s, %s}' % (cpp_str(p), cpp_str(v)) for p, v in ALGEBRA_PARAMS.get(name, []))
        out.append('      {%s,' % cpp_str(name))
        out.append('       %s,' % cpp_str(alg))
        out.append('       %s,' % cpp_str(structure))
        out.append('       %s,' % cpp_str(source))
        out.append('       ' + cpp_matrix(eta, 8) + ',')
        out.append('       {' + ',\n        '.join(cpp_matrix(b, 9) for b in blocks) + '},')
        out.append('       {%s},' % errata)
        out.append('       {%s},' % params)
        out.append('       %s},' % cpp_brackets(br))
    out += ['  };', '  return sources;', '}', '', '}  // namespace lieham::detail', '']
    open(sys.argv[2], 'w', encoding='utf-8').write('\n'.join(out))


if __name__ == '__main__':
    main()
