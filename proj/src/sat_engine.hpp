#pragma once

// Compiled condition forms for satisfaction checking. Conditions are
// flattened once against a label table; hosts are indexed against the same
// table, so the oracle can sweep many hosts without re-walking condition
// structure.

#include <memory>

#include "engine.hpp"
#include "nestcond/cond_arrow.hpp"
#include "nestcond/cond_span.hpp"

namespace nestcond::detail {

struct CompiledAb {
  IndexedGraph root;
  struct Branch {
    std::vector<int> an, ae;  // arrow root -> pat
    IndexedGraph pat;
    std::unique_ptr<CompiledAb> child;
  };
  std::vector<Branch> branches;
};

CompiledAb compile_ab(const AbCondition& c, LabelTable& table);

// g given as node/edge images of the condition root into G
bool sat_ab(const CompiledAb& c, const IndexedGraph& G,
            const std::vector<int>& gn, const std::vector<int>& ge);

struct CompiledSb {
  IndexedGraph root;
  struct Branch {
    std::vector<int> un, ue;  // up leg: interface -> root
    std::vector<int> dn, de;  // down leg: interface -> pat
    int inodes = 0, iedges = 0;
    IndexedGraph pat;
    std::unique_ptr<CompiledSb> child;
  };
  std::vector<Branch> branches;
};

CompiledSb compile_sb(const SbCondition& c, LabelTable& table);

bool sat_sb(const CompiledSb& c, const IndexedGraph& G,
            const std::vector<int>& gn, const std::vector<int>& ge);

}  // namespace nestcond::detail
