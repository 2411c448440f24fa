#pragma once

#include <Eigen/Core>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "poa/smath.hpp"

namespace poa::geom {

struct GeomError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class ShapeKind { Sphere, Box, Capsule, Mesh };

// Convex shape = core (point / segment / box / hull vertices) + outward margin.
// Sphere and capsule radii are realized as margins around degenerate cores, so
// GJK on the cores stays exact for them and shallow penetration of the rounded
// shapes never needs portal refinement.
struct ConvexShape {
  ShapeKind kind = ShapeKind::Sphere;
  double radius = 0.0;                         // sphere, capsule
  double half_length = 0.0;                    // capsule, along body z
  Eigen::Vector3d half_extents{0, 0, 0};       // box
  std::vector<Eigen::Vector3d> vertices;       // mesh hull points, body frame
  double margin = 0.0;                         // extra outward margin, all kinds

  Eigen::Vector3d interior{0, 0, 0};           // interior anchor of the core

  double outer_margin() const {
    return margin + (kind == ShapeKind::Sphere || kind == ShapeKind::Capsule ? radius : 0.0);
  }
  void validate() const;

  static ConvexShape sphere(double r, double margin = 0.0);
  static ConvexShape box(const Eigen::Vector3d& half, double margin = 0.0);
  static ConvexShape capsule(double r, double half_len, double margin = 0.0);
  static ConvexShape mesh(std::vector<Eigen::Vector3d> verts, double margin = 0.0);
};

// Core support point in body frame for a direction given in body frame.
// The id identifies the supporting core vertex (box corner bits, mesh index,
// capsule endpoint); it is what makes the witness simplex re-evaluable.
int support_core_id(const ConvexShape& shape, const Eigen::Vector3d& dir_body);
Eigen::Vector3d core_point(const ConvexShape& shape, int id);

// Exact outer-surface support point in world coordinates.
Eigen::Vector3d support(const ConvexShape& shape, const Transformd& pose,
                        const Eigen::Vector3d& direction);

// Witness simplex descriptor: 1..3 Minkowski points (a_id on A, b_id on B).
// Separated: the reduced GJK simplex. Penetrating: the final MPR portal with
// its recorded orientation sign.
struct WitnessRec {
  int count = 0;
  std::array<int, 3> a_id{{0, 0, 0}};
  std::array<int, 3> b_id{{0, 0, 0}};
  bool penetrating = false;
  double orient = 1.0;  // sign making the portal normal point away from the origin
};

struct PairDistance {
  double d = 0.0;                   // signed; negative = penetration depth
  Eigen::Vector3d witnessA{0, 0, 0};
  Eigen::Vector3d witnessB{0, 0, 0};
  Eigen::Vector3d normal{1, 0, 0};  // unit, from B toward A
  WitnessRec rec;
};

struct PointDistance {
  double d = 0.0;
  Eigen::Vector3d gradient{1, 0, 0};  // d(d)/d(point), unit away from shape
  Eigen::Vector3d witness{0, 0, 0};   // closest / deepest surface point
  WitnessRec rec;                     // used for mesh shapes only
};

// Runs GJK (separated) or MPR (cores overlapping) and returns the witness
// record only. Throws GeomError if the iteration caps are hit.
WitnessRec make_pair_rec(const ConvexShape& A, const Transformd& XA,
                         const ConvexShape& B, const Transformd& XB);
WitnessRec make_point_rec(const Eigen::Vector3d& p, const ConvexShape& shape,
                          const Transformd& X);

template <class S>
struct PairGeom {
  S d;
  V3<S> normal;    // B -> A
  V3<S> witnessA;  // outer surface of A
  V3<S> witnessB;
};

template <class S>
struct PointGeom {
  S d;
  V3<S> gradient;
  V3<S> witness;
};

// Closed-form re-evaluation of distance/normal/witnesses on a fixed witness
// simplex; with S = Dual this yields the piecewise-smooth derivatives.
template <class S>
PairGeom<S> eval_pair(const ConvexShape& A, const Transform<S>& XA,
                      const ConvexShape& B, const Transform<S>& XB,
                      const WitnessRec& rec);

template <class S>
PointGeom<S> eval_point(const V3<S>& p, const ConvexShape& shape, const Transform<S>& X,
                        const WitnessRec* rec = nullptr);

PairDistance pair_distance(const ConvexShape& A, const Transformd& XA,
                           const ConvexShape& B, const Transformd& XB);
PointDistance point_distance(const Eigen::Vector3d& p, const ConvexShape& shape,
                             const Transformd& X);

// Chain-rule driver for pose-dependent distances: given the Jacobians of both
// pose tangents (rows: tx ty tz wx wy wz, world frame) w.r.t. arbitrary DOFs,
// returns the Jacobians of d, normal, and both witness points.
struct PairJacobians {
  Eigen::MatrixXd d;         // 1 x n
  Eigen::MatrixXd normal;    // 3 x n
  Eigen::MatrixXd witnessA;  // 3 x n
  Eigen::MatrixXd witnessB;  // 3 x n
};
PairJacobians distance_jacobians(const ConvexShape& A, const Transformd& XA,
                                 const ConvexShape& B, const Transformd& XB,
                                 const PairDistance& pd,
                                 const Eigen::MatrixXd& jacA,   // 6 x n
                                 const Eigen::MatrixXd& jacB);  // 6 x n

}  // namespace poa::geom
