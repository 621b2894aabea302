#include "geometry.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"

namespace afg {

const char* rel_name(Rel r) {
    switch (r) {
        case Rel::Equal: return "equal";
        case Rel::Intersecting: return "intersecting";
        case Rel::Parallel: return "parallel";
        case Rel::Skew: return "skew";
    }
    return "?";
}

Geometry::Geometry(int n, Field f) : n_(n), f_(std::move(f)) {
    if (n < 1) fail(errc::invalid, "affine space dimension must be positive");
    long long pts = 1;
    for (int i = 0; i < n; ++i) {
        pts *= f_.q();
        if (pts > caps().vertices) fail(errc::cap, "point count q^n exceeds the vertex cap");
    }
    num_points_ = (int)pts;
    int q = f_.q();
    long long nlines = (pts / q) * ((pts - 1) / (q - 1));
    long long nflags = nlines * q;
    if (nflags > caps().vertices) fail(errc::cap, "flag count exceeds the vertex cap");

    // Enumerate lines: one per (canonical direction, coset-minimal base).
    for (int dcode = 1; dcode < num_points_; ++dcode) {
        std::vector<int> d = point_coords(dcode);
        if (canonical_dir(d) != d) continue;
        std::vector<char> used(num_points_, 0);
        for (int base = 0; base < num_points_; ++base) {
            if (used[base]) continue;
            std::vector<int> pts_on;
            std::vector<int> bc = point_coords(base);
            for (int a = 0; a < q; ++a) {
                std::vector<int> c(n_);
                for (int i = 0; i < n_; ++i) c[i] = f_.add(bc[i], f_.mul(a, d[i]));
                pts_on.push_back(point_index(c));
            }
            std::sort(pts_on.begin(), pts_on.end());
            for (int pt : pts_on) used[pt] = 1;
            lines_.push_back({pts_on[0], d});
            line_points_.push_back(std::move(pts_on));
        }
    }
    // sort lines (and their point lists) by (base, direction code)
    std::vector<int> order(lines_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    auto key = [&](int i) {
        return (long long)lines_[i].base * num_points_ + point_index(lines_[i].dir);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<Line> sl;
    std::vector<std::vector<int>> sp;
    for (int i : order) {
        sl.push_back(std::move(lines_[i]));
        sp.push_back(std::move(line_points_[i]));
    }
    lines_ = std::move(sl);
    line_points_ = std::move(sp);
    if ((long long)lines_.size() != nlines)
        fail(errc::internal, "line enumeration does not match the count formula");

    incidence_.assign(lines_.size(), std::vector<char>(num_points_, 0));
    lines_through_.assign(num_points_, {});
    for (size_t li = 0; li < lines_.size(); ++li)
        for (int pt : line_points_[li]) {
            incidence_[li][pt] = 1;
            lines_through_[pt].push_back((int)li);
        }

    flag_of_.assign(num_points_, std::vector<int>(lines_.size(), -1));
    for (int pt = 0; pt < num_points_; ++pt)
        for (int li : lines_through_[pt]) {
            flag_of_[pt][li] = (int)flags_.size();
            flags_.push_back({pt, li});
        }

    line_through_.assign(num_points_, std::vector<int>(num_points_, -1));
    for (size_t li = 0; li < lines_.size(); ++li)
        for (int u : line_points_[li])
            for (int v : line_points_[li])
                if (u != v) line_through_[u][v] = (int)li;
}

std::vector<int> Geometry::point_coords(int idx) const {
    std::vector<int> c(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        c[i] = idx % f_.q();
        idx /= f_.q();
    }
    return c;
}

int Geometry::point_index(const std::vector<int>& coords) const {
    int idx = 0;
    for (int i = 0; i < n_; ++i) idx = idx * f_.q() + coords[i];
    return idx;
}

std::vector<int> Geometry::canonical_dir(std::vector<int> d) const {
    for (int i = 0; i < n_; ++i)
        if (d[i] != 0) {
            int s = f_.inv(d[i]);
            for (int j = 0; j < n_; ++j) d[j] = f_.mul(d[j], s);
            return d;
        }
    fail(errc::invalid, "zero vector has no direction");
}

int Geometry::line_through(int u, int v) const {
    if (u == v) fail(errc::invalid, "no unique line through coincident points");
    return line_through_[u][v];
}

Rel Geometry::classify(int l1, int l2) const {
    if (l1 == l2) return Rel::Equal;
    const Line& a = lines_[l1];
    const Line& b = lines_[l2];
    if (a.dir == b.dir) return Rel::Parallel;
    // solve base_a + s*dir_a = base_b + t*dir_b by elimination over the field
    std::vector<int> ca = point_coords(a.base), cb = point_coords(b.base);
    // rows: dir_a[i] * s - dir_b[i] * t = cb[i] - ca[i]
    std::vector<std::array<int, 3>> rows(n_);
    for (int i = 0; i < n_; ++i)
        rows[i] = {a.dir[i], f_.neg(b.dir[i]), f_.sub(cb[i], ca[i])};
    int rank = 0;
    for (int col = 0; col < 2 && rank < n_; ++col) {
        int pivot = -1;
        for (int r = rank; r < n_; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        int s = f_.inv(rows[rank][col]);
        for (int j = 0; j < 3; ++j) rows[rank][j] = f_.mul(rows[rank][j], s);
        for (int r = 0; r < n_; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int factor = rows[r][col];
            for (int j = 0; j < 3; ++j) rows[r][j] = f_.sub(rows[r][j], f_.mul(factor, rows[rank][j]));
        }
        ++rank;
    }
    for (int r = rank; r < n_; ++r)
        if (rows[r][2] != 0) return Rel::Skew;
    return Rel::Intersecting;
}

int Geometry::flag_index(int point, int line) const {
    int idx = flag_of_[point][line];
    if (idx < 0) fail(errc::invalid, "point does not lie on the line: no such flag");
    return idx;
}

std::string Geometry::point_label(int point) const {
    std::vector<int> c = point_coords(point);
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

std::string Geometry::flag_label(int flag) const {
    const Flag& fl = flags_[flag];
    const Line& ln = lines_[fl.line];
    std::string s = point_label(fl.point);
    s += '|';
    s += point_label(ln.base);
    s += ';';
    for (int i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += std::to_string(ln.dir[i]);
    }
    return s;
}

namespace {
std::vector<int> parse_coords(const std::string& s, int n, int q) {
    std::vector<int> c;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail(errc::invalid, "label is not a flag: bad coordinate '" + tok + "'");
        long long v = std::stoll(tok);
        if (v >= q) fail(errc::invalid, "label is not a flag: coordinate out of field range");
        c.push_back((int)v);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if ((int)c.size() != n) fail(errc::invalid, "label is not a flag: wrong coordinate count");
    return c;
}
}  // namespace

int Geometry::parse_flag_label(const std::string& label) const {
    size_t bar = label.find('|');
    size_t semi = label.find(';');
    if (bar == std::string::npos || semi == std::string::npos || semi < bar)
        fail(errc::invalid, "label is not a flag: expected 'point|base;direction'");
    std::vector<int> pt = parse_coords(label.substr(0, bar), n_, f_.q());
    std::vector<int> base = parse_coords(label.substr(bar + 1, semi - bar - 1), n_, f_.q());
    std::vector<int> dir = parse_coords(label.substr(semi + 1), n_, f_.q());
    bool zero = std::all_of(dir.begin(), dir.end(), [](int x) { return x == 0; });
    if (zero) fail(errc::invalid, "label is not a flag: zero direction");
    if (canonical_dir(dir) != dir) fail(errc::invalid, "label is not a flag: direction not canonical");
    int b = point_index(base);
    int other = b;
    {
        std::vector<int> c = point_coords(b);
        for (int i = 0; i < n_; ++i) c[i] = f_.add(c[i], dir[i]);
        other = point_index(c);
    }
    int line = line_through_[b][other];
    if (lines_[line].base != b) fail(errc::invalid, "label is not a flag: base is not the least point");
    int p = point_index(pt);
    if (!on_line(p, line)) fail(errc::invalid, "label is not a flag: point not on the line");
    return flag_index(p, line);
}

}  // namespace afg
