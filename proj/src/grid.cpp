#include "ezeta/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "ezeta/types.hpp"

namespace ezeta {

std::string format_double(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

bool Point::has(const std::string& name) const {
    return std::any_of(coords_.begin(), coords_.end(), [&](const auto& c) { return c.first == name; });
}

double Point::get(const std::string& name) const {
    for (const auto& [k, v] : coords_)
        if (k == name) return v;
    throw DomainError("point has no coordinate '" + name + "'");
}

unsigned Point::get_uint(const std::string& name) const {
    const double v = get(name);
    if (!(v >= 0.0) || v != std::floor(v) || v > 1e9)
        throw DomainError("coordinate '" + name + "' must be a nonnegative integer");
    return static_cast<unsigned>(v);
}

void Point::set(const std::string& name, double value) {
    for (auto& [k, v] : coords_) {
        if (k == name) {
            v = value;
            return;
        }
    }
    coords_.emplace_back(name, value);
}

std::string Point::to_string() const {
    std::string out;
    for (const auto& [k, v] : coords_) {
        if (!out.empty()) out += ',';
        out += k + '=' + format_double(v);
    }
    return out;
}

bool operator<(const Point& a, const Point& b) {
    const auto& x = a.coords_;
    const auto& y = b.coords_;
    const std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].first != y[i].first) return x[i].first < y[i].first;
        if (x[i].second != y[i].second) return x[i].second < y[i].second;
    }
    return x.size() < y.size();
}

const Axis* GridSpec::axis(const std::string& name) const {
    for (const auto& a : axes)
        if (a.name == name) return &a;
    return nullptr;
}

bool GridSpec::admits(const Point& p) const {
    for (const auto& a : axes) {
        if (!p.has(a.name)) return false;
        const double v = p.get(a.name);
        if (!std::isfinite(v)) return false;
        if (a.integer && v != std::floor(v)) return false;
    }
    return !constraint || constraint(p);
}

std::vector<Point> GridSpec::enumerate() const {
    std::vector<Point> out;
    std::vector<std::size_t> idx(axes.size(), 0);
    for (const auto& a : axes)
        if (a.values.empty()) throw DomainError("grid axis '" + a.name + "' has no values");
    for (bool more = true; more;) {
        std::vector<std::pair<std::string, double>> c;
        c.reserve(axes.size());
        for (std::size_t i = 0; i < axes.size(); ++i) c.emplace_back(axes[i].name, axes[i].values[idx[i]]);
        Point p(std::move(c));
        if (admits(p)) out.push_back(std::move(p));
        more = false;
        for (std::size_t i = axes.size(); i-- > 0;) {
            if (++idx[i] < axes[i].values.size()) {
                more = true;
                break;
            }
            idx[i] = 0;
        }
    }
    if (out.empty()) throw DomainError("grid is empty after applying its constraint");
    return out;
}

namespace {

double parse_number(const std::string& raw) {
    std::string t = raw;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t.empty()) throw DomainError("grid: empty number");
    double v = 0.0;
    const char* first = t.data();
    if (*first == '+') ++first;
    const auto r = std::from_chars(first, t.data() + t.size(), v);
    if (r.ec != std::errc() || r.ptr != t.data() + t.size() || !std::isfinite(v))
        throw DomainError("grid: invalid number '" + t + "'");
    return v;
}

}  // namespace

std::vector<double> parse_axis_values(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) throw DomainError("grid: range must be start:stop:step");
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (step == 0.0) throw DomainError("grid: step must be nonzero");
        if ((stop - start) * step < 0.0) throw DomainError("grid: step points away from stop");
        const double count = std::floor((stop - start) / step + 1e-9);
        if (count > 100000) throw DomainError("grid: range has too many points");
        std::vector<double> out;
        for (long i = 0; i <= static_cast<long>(count); ++i) {
            double v = start + static_cast<double>(i) * step;
            if (std::fabs(v) < 1e-12 * std::fabs(step)) v = 0.0;
            out.push_back(v);
        }
        return out;
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    if (out.empty()) throw DomainError("grid: no values");
    return out;
}

}  // namespace ezeta
