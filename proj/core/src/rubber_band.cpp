#include "systolic/rubber_band.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace systolic {
namespace {

constexpr int kCopies = 2;  // obstacle copies at y + t*period for |t| <= kCopies

struct Vec {
  double x = 0.0;
  double y = 0.0;
};

Vec operator+(Vec p, Vec q) { return {p.x + q.x, p.y + q.y}; }
Vec operator-(Vec p, Vec q) { return {p.x - q.x, p.y - q.y}; }
Vec operator*(double s, Vec p) { return {s * p.x, s * p.y}; }
double norm(Vec p) { return std::hypot(p.x, p.y); }
double cross(Vec p, Vec q) { return p.x * q.y - p.y * q.x; }
double dot(Vec p, Vec q) { return p.x * q.x + p.y * q.y; }
Vec rotate(Vec p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Obstacle {
  Vec centre;
  bool on_left;
  std::size_t disc;
  int copy;
};

double distance_to_segment(Vec p, Vec a, Vec b) {
  const Vec e = b - a;
  const double ee = dot(e, e);
  if (ee == 0.0) return norm(p - a);
  const double t = std::clamp(dot(p - a, e) / ee, 0.0, 1.0);
  return norm(p - (a + t * e));
}

class Band {
 public:
  Band(std::vector<Obstacle> obstacles, double period, std::vector<Vec> vertices)
      : obstacles_(std::move(obstacles)), period_(period), v_(std::move(vertices)) {}

  [[nodiscard]] Vec prev(std::size_t i) const {
    return i == 0 ? v_.back() - Vec{0.0, period_} : v_[i - 1];
  }
  [[nodiscard]] Vec next(std::size_t i) const {
    return i + 1 == v_.size() ? v_.front() + Vec{0.0, period_} : v_[i + 1];
  }

  [[nodiscard]] double length() const {
    double total = 0.0;
    for (std::size_t i = 0; i < v_.size(); ++i) total += norm(next(i) - v_[i]);
    return total;
  }

  Vec push_out(Vec p, double radius) const {
    for (int pass = 0; pass < 4; ++pass) {
      bool moved = false;
      for (const Obstacle& o : obstacles_) {
        const Vec d = p - o.centre;
        const double dist = norm(d);
        if (dist >= radius) continue;
        if (dist < 1e-15) {
          p = o.centre + Vec{o.on_left ? radius : -radius, 0.0};
        } else {
          p = o.centre + ((radius * (1.0 + 1e-12)) / dist) * d;
        }
        moved = true;
      }
      if (!moved) break;
    }
    return p;
  }

  // A chord may clip a disc it wraps, but must never pass near its centre.
  [[nodiscard]] bool segment_safe(Vec a, Vec b, double radius) const {
    for (const Obstacle& o : obstacles_) {
      if (distance_to_segment(o.centre, a, b) < 0.5 * radius) return false;
    }
    return true;
  }

  void push_all(double radius) {
    for (Vec& p : v_) p = push_out(p, radius);
  }

  // One Gauss-Seidel pass; returns the length after the pass.
  void sweep(double radius) {
    for (std::size_t i = 0; i < v_.size(); ++i) {
      const Vec p = prev(i);
      const Vec q = next(i);
      const Vec candidate = push_out(0.5 * (p + q), radius);
      const double before = norm(v_[i] - p) + norm(q - v_[i]);
      const double after = norm(candidate - p) + norm(q - candidate);
      if (after <= before && segment_safe(p, candidate, radius) &&
          segment_safe(candidate, q, radius)) {
        v_[i] = candidate;
      }
    }
  }

  [[nodiscard]] std::vector<Contact> contacts(double radius) const {
    std::vector<Contact> out;
    for (const Vec& p : v_) {
      for (const Obstacle& o : obstacles_) {
        if (norm(p - o.centre) < radius * (1.0 + 1e-6)) {
          const Contact c{o.disc, o.copy};
          if (out.empty() || !(out.back() == c)) out.push_back(c);
        }
      }
    }
    // The last contact may be the first one seen one period later.
    while (out.size() > 1 && out.back().disc == out.front().disc &&
           out.back().copy == out.front().copy + 1) {
      out.pop_back();
    }
    return out;
  }

  [[nodiscard]] const std::vector<Vec>& vertices() const { return v_; }

 private:
  std::vector<Obstacle> obstacles_;
  double period_;
  std::vector<Vec> v_;
};

}  // namespace

RubberBandResult shorten_meridian(std::span<const ObstacleDisc> discs, double period, double radius,
                                  double start_x, const RubberBandOptions& options) {
  if (!(period > 0.0) || !(radius > 0.0)) throw std::invalid_argument("period and radius must be positive");
  std::vector<Obstacle> obstacles;
  double clearance = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < discs.size(); ++i) {
    const ObstacleDisc& d = discs[i];
    if (d.on_left != (d.centre.x < start_x)) {
      throw std::invalid_argument("start line does not separate left and right discs");
    }
    clearance = std::min(clearance, std::abs(d.centre.x - start_x));
    for (int t = -kCopies; t <= kCopies; ++t) {
      obstacles.push_back({{d.centre.x, d.centre.y + t * period}, d.on_left, i, t});
    }
  }
  if (!(clearance > 0.0)) throw std::invalid_argument("start line passes through a disc centre");

  const auto count = static_cast<std::size_t>(
      std::max<double>(options.min_vertices, std::ceil(8.0 * period / radius)));
  std::vector<Vec> vertices(count);
  for (std::size_t i = 0; i < count; ++i) {
    vertices[i] = {start_x, period * static_cast<double>(i) / static_cast<double>(count)};
  }
  Band band(std::move(obstacles), period, std::move(vertices));

  // Continuation: grow the discs from a radius the straight line clears.
  double current = std::min(radius, 0.5 * clearance);
  while (true) {
    band.push_all(current);
    for (int s = 0; s < 20; ++s) band.sweep(current);
    if (current >= radius) break;
    current = std::min(radius, current + options.radius_step);
  }

  RubberBandResult result;
  double last = band.length();
  int quiet = 0;
  for (int s = 0; s < options.max_sweeps; ++s) {
    band.sweep(radius);
    const double now = band.length();
    result.history.push_back(now);
    ++result.sweeps;
    quiet = (last - now < options.tolerance) ? quiet + 1 : 0;
    last = now;
    if (quiet >= 50) {
      result.converged = true;
      break;
    }
  }

  for (const Vec& p : band.vertices()) result.curve.push_back({p.x, p.y});
  result.polyline_length = band.length();
  result.contacts = band.contacts(radius);
  result.taut_length = tangent_arc_length(discs, result.contacts, period, radius);
  return result;
}

double tangent_arc_length(std::span<const ObstacleDisc> discs, std::vector<Contact> contacts,
                          double period, double radius) {
  const auto centre_of = [&](const Contact& c, int shift) {
    const PlanePoint p = discs[c.disc].centre;
    return Vec{p.x, p.y + (c.copy + shift) * period};
  };
  const auto side_of = [&](const Contact& c) { return discs[c.disc].on_left ? 1.0 : -1.0; };

  while (true) {
    const std::size_t k = contacts.size();
    if (k == 0) return period;
    // Direction and length of the tangent segment leaving each contact.
    std::vector<Vec> direction(k);
    double total = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const bool wraps = i + 1 == k;
      const Vec a = centre_of(contacts[i], 0);
      const Vec b = centre_of(contacts[wraps ? 0 : i + 1], wraps ? 1 : 0);
      const double sa = side_of(contacts[i]);
      const double sb = side_of(contacts[wraps ? 0 : i + 1]);
      const Vec delta = b - a;
      const double d = norm(delta);
      const Vec u = (1.0 / d) * delta;
      if (sa == sb) {
        direction[i] = u;
        total += d;
      } else {
        if (d <= 2.0 * radius) throw std::runtime_error("tangent_arc_length: discs overlap");
        const double ell = std::sqrt(d * d - 4.0 * radius * radius);
        direction[i] = rotate(u, -std::atan2(-2.0 * radius * sa, ell));
        total += ell;
      }
    }
    // Turning at each contact; a turn away from the disc means it is not touched.
    std::size_t bad = k;
    double arcs = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const Vec in = direction[(i + k - 1) % k];
      const Vec out = direction[i];
      const double turn = std::atan2(cross(in, out), dot(in, out));
      if (side_of(contacts[i]) * turn < -1e-9) {
        bad = i;
        break;
      }
      arcs += radius * std::abs(turn);
    }
    if (bad == k) return total + arcs;
    contacts.erase(contacts.begin() + static_cast<std::ptrdiff_t>(bad));
  }
}

}  // namespace systolic
