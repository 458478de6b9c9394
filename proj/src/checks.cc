// Copyright 2026 LSSC Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lssc/checks.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace lssc {

namespace {

// Site-level view that makes the X-type construction the exact dual of the
// Z-type one: sites are plaquettes for Z checks, stars for X checks.
struct SiteView {
    TorusLattice lat;
    Pauli pauli;

    SiteView(int L, Pauli p) : lat(L), pauli(p) {
    }

    void xor_site(BitVec &support, int r, int c) const {
        auto qs = pauli == Pauli::Z ? lat.plaquette_qubits(r, c) : lat.star_qubits(r, c);
        for (int q : qs) {
            support.flip((size_t)q);
        }
    }

    // Data qubit shared by two given sites; lowest index when L == 2 makes
    // the pair share two edges.
    int shared_qubit(int r1, int c1, int r2, int c2) const {
        BitVec a(lat.n_qubits()), b(lat.n_qubits());
        xor_site(a, r1, c1);
        xor_site(b, r2, c2);
        for (size_t k = 0; k < a.words.size(); k++) {
            a.words[k] &= b.words[k];
        }
        auto bits = a.set_bits();
        if (bits.empty()) {
            throw std::logic_error("shared_qubit: sites not adjacent");
        }
        return (int)bits[0];
    }
};

void push_check(CheckSet &set, Check &&check) {
    if (!check.support.any()) {
        set.n_removed++;
        return;
    }
    set.checks.push_back(std::move(check));
}

Check make_check(const SiteView &sv, CheckFamily family, int u, int v) {
    Check c;
    c.pauli = sv.pauli;
    c.family = family;
    c.support = BitVec(sv.lat.n_qubits());
    c.u = u;
    c.v = v;
    return c;
}

void require_divides(int L, int l) {
    if (l < 1 || L % l != 0) {
        throw std::invalid_argument("patch extent l must divide L");
    }
}

}  // namespace

BinaryMatrix CheckSet::matrix() const {
    BinaryMatrix m((size_t)padded_rows(), (size_t)(2 * L * L));
    for (size_t i = 0; i < checks.size(); i++) {
        m.row[i] = checks[i].support;
    }
    return m;
}

Origins square_patch_origins(int L, int l, int shift_r, int shift_c) {
    require_divides(L, l);
    TorusLattice lat(L);
    Origins out;
    for (int u = 0; u < L; u += l) {
        for (int v = 0; v < L; v += l) {
            out.emplace_back(lat.wrap(u + shift_r), lat.wrap(v + shift_c));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Origins strip_origins(int L, int l, int shift_r) {
    require_divides(L, l);
    TorusLattice lat(L);
    Origins out;
    for (int u = 0; u < L; u += l) {
        for (int v = 0; v < L; v++) {
            out.emplace_back(lat.wrap(u + shift_r), v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CheckSet build_local_checks(int L, Pauli pauli) {
    if (L < 2) {
        throw std::invalid_argument("build_local_checks: L must be >= 2");
    }
    SiteView sv(L, pauli);
    CheckSet set;
    set.pauli = pauli;
    set.kind = FamilyKind::Local;
    set.L = L;
    set.l = 1;
    for (int r = 0; r < L; r++) {
        for (int c = 0; c < L; c++) {
            Check ck = make_check(sv, CheckFamily::Local, r, c);
            sv.xor_site(ck.support, r, c);
            push_check(set, std::move(ck));
        }
    }
    return set;
}

std::pair<CheckSet, CheckSet> build_local_checks(int L) {
    return {build_local_checks(L, Pauli::Z), build_local_checks(L, Pauli::X)};
}

CheckSet build_single_shot_checks(int L, Pauli pauli) {
    if (L < 2) {
        throw std::invalid_argument("build_single_shot_checks: L must be >= 2");
    }
    SiteView sv(L, pauli);
    CheckSet set;
    set.pauli = pauli;
    set.kind = FamilyKind::SingleShot;
    set.L = L;
    set.l = L;
    // The set has L^2-1 members; the implicit full-torus identity keeps the
    // padded matrix square for conversion.
    set.n_removed = 1;

    // Square checks S_i: the top row of sites.
    for (int i = 0; i < L; i++) {
        Check ck = make_check(sv, CheckFamily::SquareSS, -1, -1);
        sv.xor_site(ck.support, 0, i);
        ck.mapped_qubit = sv.shared_qubit(0, i, 1, i);
        push_check(set, std::move(ck));
    }
    // Rectangular checks R_{i,j}: rows i..L-1 of column j.
    for (int i = 2; i < L; i++) {
        for (int j = 0; j < L; j++) {
            Check ck = make_check(sv, CheckFamily::RectSS, -1, -1);
            for (int k = i; k < L; k++) {
                sv.xor_site(ck.support, k, j);
            }
            ck.mapped_qubit = sv.shared_qubit(i - 1, j, i, j);
            push_check(set, std::move(ck));
        }
    }
    // Circular checks C_i: columns 0..i.
    for (int i = 0; i < L - 1; i++) {
        Check ck = make_check(sv, CheckFamily::CircSS, -1, -1);
        for (int m = 0; m <= i; m++) {
            for (int n = 0; n < L; n++) {
                sv.xor_site(ck.support, n, m);
            }
        }
        ck.mapped_qubit = sv.shared_qubit(1, i, 1, i + 1);
        push_check(set, std::move(ck));
    }
    return set;
}

CheckSet build_variable_width_checks(int L, int l, const Origins &origins, Pauli pauli) {
    if (L < 2) {
        throw std::invalid_argument("build_variable_width_checks: L must be >= 2");
    }
    require_divides(L, l);
    SiteView sv(L, pauli);
    CheckSet set;
    set.pauli = pauli;
    set.kind = FamilyKind::VariableWidth;
    set.L = L;
    set.l = l;

    for (auto [u, v] : origins) {
        if (l == 1) {
            // Square and full-patch checks coincide: the local check.
            Check ck = make_check(sv, CheckFamily::Local, u, v);
            sv.xor_site(ck.support, u, v);
            push_check(set, std::move(ck));
            continue;
        }
        // S^{u,v}_i: the top row of the patch.
        for (int i = 0; i < l; i++) {
            Check ck = make_check(sv, CheckFamily::SquareVW, u, v);
            sv.xor_site(ck.support, u, v + i);
            ck.mapped_qubit = sv.shared_qubit(u, v + i, u + 1, v + i);
            push_check(set, std::move(ck));
        }
        // N^{u,v}_{i,j}: rows i..l-1 of patch column j.
        for (int i = 2; i < l; i++) {
            for (int j = 0; j < l; j++) {
                Check ck = make_check(sv, CheckFamily::NarrowVW, u, v);
                for (int k = i; k < l; k++) {
                    sv.xor_site(ck.support, u + k, v + j);
                }
                ck.mapped_qubit = sv.shared_qubit(u + i - 1, v + j, u + i, v + j);
                push_check(set, std::move(ck));
            }
        }
        // W^{u,v}_i: patch columns i..l-1, all rows. W_0 maps to a time edge
        // (its designated qubit sits on the patch boundary); at l == L it is
        // the identity and is dropped.
        for (int i = 0; i < l; i++) {
            Check ck = make_check(sv, CheckFamily::WideVW, u, v);
            for (int m = i; m < l; m++) {
                for (int n = 0; n < l; n++) {
                    sv.xor_site(ck.support, u + n, v + m);
                }
            }
            ck.mapped_qubit = i == 0 ? kTimeEdge : sv.shared_qubit(u + 1, v + i - 1, u + 1, v + i);
            push_check(set, std::move(ck));
        }
    }
    return set;
}

CheckSet build_fixed_width_checks(int L, int l, const Origins &origins, Pauli pauli) {
    if (L < 2) {
        throw std::invalid_argument("build_fixed_width_checks: L must be >= 2");
    }
    require_divides(L, l);
    SiteView sv(L, pauli);
    CheckSet set;
    set.pauli = pauli;
    set.kind = FamilyKind::FixedWidth;
    set.L = L;
    set.l = l;

    for (auto [u, v] : origins) {
        if (l == 1) {
            Check ck = make_check(sv, CheckFamily::Local, u, v);
            sv.xor_site(ck.support, u, v);
            push_check(set, std::move(ck));
            continue;
        }
        // Top-boundary check: the strip's first site.
        {
            Check ck = make_check(sv, CheckFamily::TopFW, u, v);
            sv.xor_site(ck.support, u, v);
            ck.mapped_qubit = sv.shared_qubit(u, v, u + 1, v);
            push_check(set, std::move(ck));
        }
        // Bottom-boundary checks B~_i: rows i..l-1 (absent for l <= 2).
        for (int i = 2; i < l; i++) {
            Check ck = make_check(sv, CheckFamily::BottomFW, u, v);
            for (int k = i; k < l; k++) {
                sv.xor_site(ck.support, u + k, v);
            }
            ck.mapped_qubit = sv.shared_qubit(u + i - 1, v, u + i, v);
            push_check(set, std::move(ck));
        }
        // Full-patch check: the whole strip; measurement errors become time
        // edges.
        {
            Check ck = make_check(sv, CheckFamily::FullFW, u, v);
            for (int k = 0; k < l; k++) {
                sv.xor_site(ck.support, u + k, v);
            }
            ck.mapped_qubit = kTimeEdge;
            push_check(set, std::move(ck));
        }
    }
    return set;
}

LogicalOperators logical_operators(int L) {
    if (L < 2) {
        throw std::invalid_argument("logical_operators: L must be >= 2");
    }
    TorusLattice lat(L);
    LogicalOperators ops;
    ops.z1 = BitVec(lat.n_qubits());
    ops.z2 = BitVec(lat.n_qubits());
    ops.x1 = BitVec(lat.n_qubits());
    ops.x2 = BitVec(lat.n_qubits());
    for (int i = 0; i < L; i++) {
        ops.z1.set((size_t)lat.h(0, i), true);  // horizontal Z loop
        ops.z2.set((size_t)lat.v(i, 0), true);  // vertical Z loop
        ops.x1.set((size_t)lat.h(i, 0), true);  // crosses z1 once
        ops.x2.set((size_t)lat.v(0, i), true);  // crosses z2 once
    }
    return ops;
}

const char *family_name(CheckFamily f) {
    switch (f) {
        case CheckFamily::Local:
            return "Local";
        case CheckFamily::SquareSS:
            return "SquareSS";
        case CheckFamily::RectSS:
            return "RectSS";
        case CheckFamily::CircSS:
            return "CircSS";
        case CheckFamily::SquareVW:
            return "SquareVW";
        case CheckFamily::NarrowVW:
            return "NarrowVW";
        case CheckFamily::WideVW:
            return "WideVW";
        case CheckFamily::TopFW:
            return "TopFW";
        case CheckFamily::BottomFW:
            return "BottomFW";
        case CheckFamily::FullFW:
            return "FullFW";
    }
    return "?";
}

const char *family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Local:
            return "local";
        case FamilyKind::SingleShot:
            return "single-shot";
        case FamilyKind::VariableWidth:
            return "vw";
        case FamilyKind::FixedWidth:
            return "fw";
    }
    return "?";
}

namespace {

CheckFamily family_from_name(const std::string &s) {
    for (int f = 0; f <= (int)CheckFamily::FullFW; f++) {
        if (s == family_name((CheckFamily)f)) {
            return (CheckFamily)f;
        }
    }
    throw std::invalid_argument("unknown check family: " + s);
}

FamilyKind family_kind_from_name(const std::string &s) {
    for (int k = 0; k <= (int)FamilyKind::FixedWidth; k++) {
        if (s == family_kind_name((FamilyKind)k)) {
            return (FamilyKind)k;
        }
    }
    throw std::invalid_argument("unknown family kind: " + s);
}

}  // namespace

void save_checks(std::ostream &out, const CheckSet &set) {
    out << "# checkset L=" << set.L << " l=" << set.l << " pauli=" << (set.pauli == Pauli::Z ? 'Z' : 'X')
        << " kind=" << family_kind_name(set.kind) << " removed=" << set.n_removed << "\n";
    for (const Check &ck : set.checks) {
        out << "check " << (ck.pauli == Pauli::Z ? 'Z' : 'X') << ' ' << family_name(ck.family) << " u=" << ck.u
            << " v=" << ck.v << " map=";
        if (ck.mapped_qubit == kTimeEdge) {
            out << "TIME";
        } else {
            out << ck.mapped_qubit;
        }
        for (uint32_t q : ck.support.set_bits()) {
            out << " q" << q;
        }
        out << "\n";
    }
}

CheckSet load_checks(std::istream &in) {
    CheckSet set;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            hs >> tok;  // "checkset"
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) {
                    continue;
                }
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                if (key == "L") {
                    set.L = std::stoi(val);
                } else if (key == "l") {
                    set.l = std::stoi(val);
                } else if (key == "pauli") {
                    set.pauli = val == "Z" ? Pauli::Z : Pauli::X;
                } else if (key == "kind") {
                    set.kind = family_kind_from_name(val);
                } else if (key == "removed") {
                    set.n_removed = std::stoi(val);
                }
            }
            have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok != "check") {
            throw std::invalid_argument("load_checks: bad line: " + line);
        }
        Check ck;
        ls >> tok;
        ck.pauli = tok == "Z" ? Pauli::Z : Pauli::X;
        ls >> tok;
        ck.family = family_from_name(tok);
        std::vector<uint32_t> qubits;
        while (ls >> tok) {
            if (tok.rfind("u=", 0) == 0) {
                ck.u = std::stoi(tok.substr(2));
            } else if (tok.rfind("v=", 0) == 0) {
                ck.v = std::stoi(tok.substr(2));
            } else if (tok.rfind("map=", 0) == 0) {
                std::string m = tok.substr(4);
                ck.mapped_qubit = m == "TIME" ? kTimeEdge : std::stoi(m);
            } else if (tok[0] == 'q') {
                qubits.push_back((uint32_t)std::stoul(tok.substr(1)));
            } else {
                throw std::invalid_argument("load_checks: bad token: " + tok);
            }
        }
        if (!have_header) {
            throw std::invalid_argument("load_checks: missing header line");
        }
        ck.support = BitVec((size_t)(2 * set.L * set.L));
        for (uint32_t q : qubits) {
            ck.support.set(q, true);
        }
        set.checks.push_back(std::move(ck));
    }
    return set;
}

}  // namespace lssc
