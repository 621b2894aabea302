#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "field.hpp"

namespace afg {

// A line of AG(n,q) in canonical form: the direction's first nonzero
// coordinate is 1 and the base is the lexicographically least point on the
// line, so value equality is line equality.
struct Line {
    int base;              // point index of the least point
    std::vector<int> dir;  // canonical direction vector
};

struct Flag {
    int point;
    int line;
    friend bool operator==(const Flag&, const Flag&) = default;
};

enum class Rel { Equal, Intersecting, Parallel, Skew };

const char* rel_name(Rel r);

// AG(n,q), fully enumerated.  Points are indices in [0, q^n): the coordinate
// vector in big-endian mixed radix (first coordinate most significant), so
// index order is lexicographic order on coordinates.  Lines are sorted by
// (base index, direction code); flags point-major then by line index.
class Geometry {
public:
    Geometry(int n, Field f);

    int n() const { return n_; }
    const Field& field() const { return f_; }
    int q() const { return f_.q(); }
    int num_points() const { return num_points_; }
    const std::vector<Line>& lines() const { return lines_; }
    const std::vector<Flag>& flags() const { return flags_; }

    std::vector<int> point_coords(int idx) const;
    int point_index(const std::vector<int>& coords) const;

    int line_through(int u, int v) const;  // error on u == v
    const std::vector<int>& line_points(int line) const { return line_points_[line]; }
    const std::vector<int>& lines_through(int point) const { return lines_through_[point]; }
    bool on_line(int point, int line) const { return incidence_[line][point] != 0; }

    Rel classify(int l1, int l2) const;

    int flag_index(int point, int line) const;  // error if not incident

    std::string point_label(int point) const;
    std::string flag_label(int flag) const;
    int parse_flag_label(const std::string& label) const;

private:
    int n_;
    Field f_;
    int num_points_;
    std::vector<Line> lines_;
    std::vector<Flag> flags_;
    std::vector<std::vector<int>> line_points_;
    std::vector<std::vector<int>> lines_through_;
    std::vector<std::vector<char>> incidence_;
    std::vector<std::vector<int>> line_through_;  // [u][v], -1 on diagonal
    std::vector<std::vector<int>> flag_of_;       // [point][line], -1 if not incident

    std::vector<int> canonical_dir(std::vector<int> d) const;
};

}  // namespace afg
