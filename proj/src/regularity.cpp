#include "behavioral/regularity.hpp"

#include <stdexcept>

namespace behavioral {

bool is_regular(const Behavior& b1, const Behavior& b2, const std::vector<SharedPair>& shared) {
  const Eigen::Index joint = cardinalities(interconnect(b1, b2, shared)).p;
  return joint == cardinalities(b1).p + cardinalities(b2).p;
}

bool plant_controller_regular(const Network& net, const Behavior& controller) {
  require_valid(net);
  const std::vector<std::string> c_names = c_group_names(net);
  const Behavior plant_wc = manifest_plant_wc(net);
  const Behavior ctrl_c = eliminate(controller, c_names);

  std::vector<SharedPair> shared;
  for (const auto& c : c_names) shared.emplace_back(c);
  const Eigen::Index joint = cardinalities(interconnect(plant_wc, ctrl_c, shared)).p;
  return joint == cardinalities(plant_wc).p + cardinalities(ctrl_c).p;
}

bool free_control_sufficient(const Network& net) {
  require_valid(net);
  return manifest_plant_c(net).kernel.rows() == 0;
}

PolyMat BlockLN::l1n1() const {
  PolyMat m = poly_zero(l1.rows(), l1.cols() + n1.cols());
  m.leftCols(l1.cols()) = l1;
  m.rightCols(n1.cols()) = n1;
  return m;
}

PolyMat BlockLN::l2n2() const {
  PolyMat m = poly_zero(l2.rows(), l2.cols() + n2.cols());
  m.leftCols(l2.cols()) = l2;
  m.rightCols(n2.cols()) = n2;
  return m;
}

PolyMat BlockLN::stacked() const {
  const PolyMat top = l1n1();
  const PolyMat bottom = l2n2();
  PolyMat m = poly_zero(top.rows() + bottom.rows(), top.cols());
  m.topRows(top.rows()) = top;
  m.bottomRows(bottom.rows()) = bottom;
  return m;
}

PolyMat BlockLN::n_stack() const {
  PolyMat m = poly_zero(n1.rows() + n2.rows(), n1.cols());
  m.topRows(n1.rows()) = n1;
  m.bottomRows(n2.rows()) = n2;
  return m;
}

BlockLN assemble_block_ln(const Behavior& plant1, const Behavior& desired1,
                          const Behavior& plant2, const Behavior& desired2) {
  const auto shape_error = [](const std::string& what) {
    throw std::invalid_argument("block template mismatch: " + what);
  };
  for (const Behavior* p : {&plant1, &plant2})
    if (p->sig.groups().size() != 3) shape_error("plants must carry exactly (w, s, c)");
  for (const Behavior* k : {&desired1, &desired2})
    if (k->sig.groups().size() != 2) shape_error("desired behaviors must carry exactly (w, k)");

  const Eigen::Index w1 = plant1.sig.groups()[0].dim;
  const Eigen::Index w2 = plant2.sig.groups()[0].dim;
  const Eigen::Index s = plant1.sig.groups()[1].dim;
  const Eigen::Index c1 = plant1.sig.groups()[2].dim;
  const Eigen::Index c2 = plant2.sig.groups()[2].dim;
  const Eigen::Index k = desired1.sig.groups()[1].dim;
  if (plant2.sig.groups()[1].dim != s) shape_error("plants disagree on the s dimension");
  if (desired2.sig.groups()[1].dim != k) shape_error("desired behaviors disagree on the k dimension");
  if (desired1.sig.groups()[0].dim != w1 || desired2.sig.groups()[0].dim != w2)
    shape_error("plant and desired behavior disagree on a w dimension");

  const PolyMat p1 = minimize(plant1).kernel;
  const PolyMat p2 = minimize(plant2).kernel;
  const PolyMat d1 = minimize(desired1).kernel;
  const PolyMat d2 = minimize(desired2).kernel;

  // Column layout of [L | N]: (c1, c2, s, k | w1, w2).
  BlockLN b;
  b.l1 = poly_zero(p1.rows() + d1.rows(), c1 + c2 + s + k);
  b.n1 = poly_zero(p1.rows() + d1.rows(), w1 + w2);
  b.l1.block(0, 0, p1.rows(), c1) = p1.rightCols(c1);
  b.l1.block(0, c1 + c2, p1.rows(), s) = p1.middleCols(w1, s);
  b.n1.block(0, 0, p1.rows(), w1) = p1.leftCols(w1);
  b.l1.block(p1.rows(), c1 + c2 + s, d1.rows(), k) = d1.rightCols(k);
  b.n1.block(p1.rows(), 0, d1.rows(), w1) = d1.leftCols(w1);

  b.l2 = poly_zero(p2.rows() + d2.rows(), c1 + c2 + s + k);
  b.n2 = poly_zero(p2.rows() + d2.rows(), w1 + w2);
  b.l2.block(0, c1, p2.rows(), c2) = p2.rightCols(c2);
  b.l2.block(0, c1 + c2, p2.rows(), s) = p2.middleCols(w2, s);
  b.n2.block(0, w1, p2.rows(), w2) = p2.leftCols(w2);
  b.l2.block(p2.rows(), c1 + c2 + s, d2.rows(), k) = d2.rightCols(k);
  b.n2.block(p2.rows(), w1, d2.rows(), w2) = d2.leftCols(w2);
  return b;
}

bool pairwise_canonical_regular(const Behavior& plant1, const Behavior& desired1,
                                const Behavior& plant2, const Behavior& desired2) {
  const BlockLN b = assemble_block_ln(plant1, desired1, plant2, desired2);
  return rank(b.l1n1()) + rank(b.l2n2()) == rank(b.stacked());
}

Eigen::Index pairwise_canonical_output_cardinality(const Behavior& plant1,
                                                   const Behavior& desired1,
                                                   const Behavior& plant2,
                                                   const Behavior& desired2) {
  const BlockLN b = assemble_block_ln(plant1, desired1, plant2, desired2);
  return rank(b.stacked()) - rank(b.n_stack());
}

RegularEquivalence regular_equiv(const Behavior& plant1, const Behavior& desired1,
                                 const Behavior& plant2, const Behavior& desired2) {
  RegularEquivalence out;
  out.controllers = pairwise_canonical_regular(plant1, desired1, plant2, desired2);
  out.plants = is_regular(plant1, plant2,
                          {SharedPair(plant1.sig.groups()[1].name, plant2.sig.groups()[1].name)});
  out.desireds =
      is_regular(desired1, desired2,
                 {SharedPair(desired1.sig.groups()[1].name, desired2.sig.groups()[1].name)});
  return out;
}

}  // namespace behavioral
