#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace ezeta {

/// One parameter record: named coordinates in axis order.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<std::pair<std::string, double>> coords) : coords_(std::move(coords)) {}

    const std::vector<std::pair<std::string, double>>& coords() const { return coords_; }
    bool has(const std::string& name) const;
    /// DomainError if the axis is absent.
    double get(const std::string& name) const;
    /// DomainError if absent, negative, or not integral.
    unsigned get_uint(const std::string& name) const;
    void set(const std::string& name, double value);

    /// "s=-1.5,k=2" with shortest round-trip numbers
    std::string to_string() const;

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
    /// Lexicographic on values in axis order.
    friend bool operator<(const Point& a, const Point& b);

private:
    std::vector<std::pair<std::string, double>> coords_;
};

struct Axis {
    std::string name;
    std::vector<double> values;
    bool integer = false;
};

/// Cartesian product of axes, filtered by an optional constraint.
struct GridSpec {
    std::vector<Axis> axes;
    std::function<bool(const Point&)> constraint;
    std::string constraint_text;

    const Axis* axis(const std::string& name) const;
    bool admits(const Point& p) const;
    /// Points in axis-major order; DomainError if the filtered product is empty.
    std::vector<Point> enumerate() const;
};

/// start:stop:step (inclusive, step sign must point from start to stop) or a comma list.
std::vector<double> parse_axis_values(const std::string& text);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

}  // namespace ezeta
