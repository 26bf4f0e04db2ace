#include "qmod/module.hpp"

#include "qmod/error.hpp"

namespace qmod {

Module::Module(AlgebraPtr algebra, Field field, DimVector dim, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), field_(field), dim_(std::move(dim)), maps_(std::move(maps)) {
  const Quiver& q = algebra_->quiver();
  if (dim_.size() != q.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "dimension vector has wrong length");
  for (int v : dim_.values())
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  if (maps_.size() != q.arrow_count()) throw Error(ErrorCode::InvalidArgument, "one matrix per arrow required");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& arrow = q.arrow(a);
    if (maps_[a].rows() != this->dim(arrow.head) || maps_[a].cols() != this->dim(arrow.tail))
      throw Error(ErrorCode::InvalidArgument, "matrix for arrow '" + arrow.id + "' has the wrong shape");
  }
  for (const Relation& r : algebra_->relations()) {
    if (!multiply(field_, maps_[r.second], maps_[r.first]).is_zero())
      throw Error(ErrorCode::InvalidArgument, "relation (" + q.arrow(r.first).id + ", " + q.arrow(r.second).id +
                                                  ") does not vanish");
  }
}

Module Module::zero(AlgebraPtr algebra, Field field) {
  const Quiver& q = algebra->quiver();
  std::vector<Matrix> maps(q.arrow_count());
  DimVector d(q.vertex_count());
  return Module(std::move(algebra), field, d, std::move(maps));
}

std::vector<std::size_t> Module::ranks() const {
  std::vector<std::size_t> r;
  for (const Matrix& m : maps_) r.push_back(rank(field_, m));
  return r;
}

RankSequence Module::rank_sequence() const {
  RankSequence r(maps_.size());
  for (std::size_t a = 0; a < maps_.size(); ++a) r[a] = static_cast<int>(rank(field_, maps_[a]));
  return r;
}

DimVector Submodule::dim() const {
  DimVector d(basis.size());
  for (std::size_t x = 0; x < basis.size(); ++x) d[x] = static_cast<int>(basis[x].cols());
  return d;
}

}  // namespace qmod
