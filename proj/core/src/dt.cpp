#include "tnlb/dt.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "tnlb/errors.hpp"

namespace tnlb {

namespace {

struct Diagram {
    size_t n = 0;                  // crossings
    std::vector<size_t> crossing;  // position (0-based) -> crossing id
    std::vector<bool> over;        // position -> passes over here
    std::vector<size_t> pos_a;     // crossing -> odd-label position
    std::vector<size_t> pos_b;     // crossing -> even-label position
};

Diagram read_code(const std::vector<long>& dt) {
    if (dt.empty()) throw ConfigError("invalid DT code: empty");
    Diagram d;
    d.n = dt.size();
    const size_t len = 2 * d.n;
    d.crossing.assign(len, 0);
    d.over.assign(len, false);
    d.pos_a.resize(d.n);
    d.pos_b.resize(d.n);

    std::set<long> seen;
    for (size_t i = 0; i < d.n; ++i) {
        long v = dt[i];
        long av = std::labs(v);
        if (v == 0 || av % 2 != 0)
            throw ConfigError("invalid DT code: entries must be nonzero even integers");
        if (av > static_cast<long>(len))
            throw ConfigError("invalid DT code: label " + std::to_string(v) +
                              " out of range");
        if (!seen.insert(av).second)
            throw ConfigError("invalid DT code: repeated label " + std::to_string(av));

        size_t odd_pos = 2 * i;                       // label 2i+1
        size_t even_pos = static_cast<size_t>(av) - 1;  // label |v|
        d.crossing[odd_pos] = i;
        d.crossing[even_pos] = i;
        d.pos_a[i] = odd_pos;
        d.pos_b[i] = even_pos;
        d.over[odd_pos] = v > 0;
        d.over[even_pos] = v < 0;
    }
    return d;
}

// Counts faces of the embedding given one rotation choice per crossing and
// checks the sphere condition V - E + F = 2. Edge-ends are indexed
// 2s (tail of segment s) and 2s+1 (head); segment s runs from visit s to
// visit s+1 (cyclically).
bool is_planar(const Diagram& d, const std::vector<bool>& flip) {
    const size_t len = 2 * d.n;
    auto prev = [&](size_t p) { return (p + len - 1) % len; };
    auto head_of = [&](size_t s) { return 2 * s + 1; };
    auto tail_of = [&](size_t s) { return 2 * s; };

    // rotation: successor of each edge-end in ccw order around its vertex
    std::vector<size_t> rot(2 * len);
    for (size_t c = 0; c < d.n; ++c) {
        size_t pa = d.pos_a[c], pb = d.pos_b[c];
        size_t in_a = head_of(prev(pa)), out_a = tail_of(pa);
        size_t in_b = head_of(prev(pb)), out_b = tail_of(pb);
        size_t slots[4];
        if (!flip[c]) {
            slots[0] = in_a; slots[1] = in_b; slots[2] = out_a; slots[3] = out_b;
        } else {
            slots[0] = in_a; slots[1] = out_b; slots[2] = out_a; slots[3] = in_b;
        }
        for (int k = 0; k < 4; ++k) rot[slots[k]] = slots[(k + 1) % 4];
    }

    // faces = orbits of (rotation after edge reversal)
    std::vector<bool> visited(2 * len, false);
    size_t faces = 0;
    for (size_t e = 0; e < 2 * len; ++e) {
        if (visited[e]) continue;
        ++faces;
        size_t cur = e;
        while (!visited[cur]) {
            visited[cur] = true;
            cur = rot[cur ^ 1];  // cross the segment, then turn
        }
    }
    return faces == d.n + 2;
}

}  // namespace

GroupPresentation wirtinger_from_dt(const std::vector<long>& dt_code) {
    Diagram d = read_code(dt_code);
    const size_t n = d.n;
    const size_t len = 2 * n;
    if (n > 24) throw ConfigError("DT code too large for embedding search");

    // Search rotation assignments; the first crossing can be fixed since a
    // global flip is a mirror image.
    std::vector<bool> flip(n, false);
    bool found = false;
    for (size_t bits = 0; bits < (size_t(1) << (n > 1 ? n - 1 : 0)) && !found; ++bits) {
        for (size_t c = 1; c < n; ++c) flip[c] = (bits >> (c - 1)) & 1;
        found = is_planar(d, flip);
    }
    if (!found) throw ConfigError("invalid DT code: pairing is not realizable");

    // Arc labels per segment; arcs are cut at undercrossing visits.
    auto prev = [&](size_t p) { return (p + len - 1) % len; };
    std::vector<size_t> arc(len);
    size_t cur = 0;
    for (size_t p = 0; p < len; ++p) {
        if (p > 0 && !d.over[p]) ++cur;
        arc[p] = cur;
    }
    if (d.over[0]) {
        // the closing segment continues through visit 0 into arc 0
        for (size_t p = 0; p < len; ++p)
            if (arc[p] == cur) arc[p] = 0;
    }

    GroupPresentation p;
    for (size_t i = 1; i <= n; ++i) p.generator_names.push_back("a" + std::to_string(i));

    for (size_t c = 0; c + 1 < n; ++c) {  // drop the last crossing's relator
        size_t pu = d.over[d.pos_a[c]] ? d.pos_b[c] : d.pos_a[c];
        size_t po = d.over[d.pos_a[c]] ? d.pos_a[c] : d.pos_b[c];

        int frame = flip[c] ? -1 : 1;
        int sign = (po == d.pos_a[c]) ? frame : -frame;

        int o = static_cast<int>(arc[po]);
        int ain = static_cast<int>(arc[prev(pu)]);
        int aout = static_cast<int>(arc[pu]);

        Word w = Word::generator(o, sign) * Word::generator(ain) *
                 Word::generator(o, -sign) * Word::generator(aout, -1);
        p.relators.push_back(w);
    }
    return p;
}

}  // namespace tnlb
