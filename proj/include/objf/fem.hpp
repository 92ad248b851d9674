// fem.hpp
//
// Linear isotropic elasticity on the voxel mesh: per-element stiffness
// (trilinear hex8, 2x2x2 Gauss) and lumped mass, assembled into global
// matrices. Dof ordering is node-major with (x,y,z) within each node.

#pragma once

#include "objf/material.hpp"
#include "objf/types.hpp"
#include "objf/voxelize.hpp"

namespace objf {

struct SystemMatrices {
  VecX mass_diag;  // 3*N_nodes lumped masses, kg
  SpMat stiffness; // 3*N_nodes x 3*N_nodes, N/m
  Index dof_count = 0;
  int component_count = 1;  // connected components of the hex mesh
};

using ElementStiffness = Eigen::Matrix<Scalar, 24, 24>;
using ElementMass = Eigen::Matrix<Scalar, 24, 1>;

// Stiffness from 2x2x2 Gauss quadrature of B^T D B (exact for a cube
// trilinear element); mass lumped as rho*edge^3/8 per node per axis.
void element_matrices(Scalar voxel_edge, const MaterialRecord& material,
                      ElementStiffness& stiffness, ElementMass& mass);

// Scatter-add of element matrices. Duplicate entries are accumulated in a
// sorted order, so the result is independent of element ordering. A
// disconnected mesh produces a warning on stderr plus component_count > 1.
SystemMatrices assemble(const HexMesh& hex, const MaterialRecord& material);

}  // namespace objf
