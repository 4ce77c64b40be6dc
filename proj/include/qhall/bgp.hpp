/*
  bgp.hpp

  Reflection functors between representation categories of a quiver and
  its reorientation at a sink/source vertex, plus the direct-summand
  splitter for the simple module at a vertex.
*/

#pragma once

#include "qhall/quiver.hpp"

namespace qhall {

// kernel construction at a sink: the result lives over Q.reversed_at(i)
Rep reflect_plus(const ValuedQuiver& Q, int i, const Rep& V);

// cokernel construction at a source
Rep reflect_minus(const ValuedQuiver& Q, int i, const Rep& V);

// V ~ t * S_i + rest, with rest free of S_i summands
struct SimpleSplit {
  int t = 0;
  Rep rest;
};
SimpleSplit split_simple_summand(const ValuedQuiver& Q, int i, const Rep& V);

bool no_simple_summand(const ValuedQuiver& Q, int i, const Rep& V);

}  // namespace qhall
