#include "lietype/matrix_group.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace lietype {

FqMatrix::FqMatrix(const Fq* field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols) {}

FqMatrix FqMatrix::identity(const Fq& field, int n) {
  FqMatrix m(&field, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FqMatrix: shape mismatch");
  const Fq& F = *field_;
  FqMatrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const FqElem x = at(i, k);
      if (F.is_zero(x)) continue;
      for (int j = 0; j < o.cols_; ++j) {
        out.at(i, j) = F.add(out.at(i, j), F.mul(x, o.at(k, j)));
      }
    }
  }
  return out;
}

bool FqMatrix::operator==(const FqMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

FqMatrix FqMatrix::add(const FqMatrix& o) const {
  FqMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = field_->add(a_[i], o.a_[i]);
  return out;
}

FqMatrix FqMatrix::sub(const FqMatrix& o) const {
  FqMatrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = field_->sub(a_[i], o.a_[i]);
  return out;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

FqMatrix FqMatrix::pow(std::uint64_t e) const {
  FqMatrix base = *this;
  FqMatrix out = identity(*field_, rows_);
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

FqElem FqMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("FqMatrix: det of non-square");
  const Fq& F = *field_;
  FqMatrix m = *this;
  FqElem d = F.one();
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (!F.is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) return F.zero();
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(col, col));
    const FqElem inv = F.inv(m.at(col, col));
    for (int i = col + 1; i < rows_; ++i) {
      const FqElem f = F.mul(m.at(i, col), inv);
      if (F.is_zero(f)) continue;
      for (int j = col; j < cols_; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(col, j)));
    }
  }
  return d;
}

FqMatrix FqMatrix::inverse() const {
  if (rows_ != cols_)
    throw std::invalid_argument("FqMatrix: inverse of non-square");
  const Fq& F = *field_;
  FqMatrix m = *this;
  FqMatrix inv = identity(F, rows_);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (!F.is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("FqMatrix: singular matrix");
    if (pivot != col)
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    const FqElem s = F.inv(m.at(col, col));
    for (int j = 0; j < cols_; ++j) {
      m.at(col, j) = F.mul(s, m.at(col, j));
      inv.at(col, j) = F.mul(s, inv.at(col, j));
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == col) continue;
      const FqElem f = m.at(i, col);
      if (F.is_zero(f)) continue;
      for (int j = 0; j < cols_; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(col, j)));
        inv.at(i, j) = F.sub(inv.at(i, j), F.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

bool FqMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](FqElem x) { return x.code == 0; });
}

bool FqMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j).code != (i == j ? field_->one().code : 0)) return false;
  return true;
}

bool FqMatrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && at(i, j).code != 0) return false;
  return true;
}

bool FqMatrix::is_upper_unitriangular() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    if (at(i, i).code != field_->one().code) return false;
    for (int j = 0; j < i; ++j)
      if (at(i, j).code != 0) return false;
  }
  return true;
}

std::string FqMatrix::key() const {
  std::string s(a_.size() * 2, '\0');
  for (std::size_t i = 0; i < a_.size(); ++i) {
    s[2 * i] = static_cast<char>(a_[i].code & 0xff);
    s[2 * i + 1] = static_cast<char>(a_[i].code >> 8);
  }
  return s;
}

std::string FqMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows_; ++i) {
    s += i == 0 ? "[" : " ";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += " ";
      s += field_->to_string(at(i, j));
    }
    s += i + 1 == rows_ ? "]" : "\n";
  }
  return s;
}

FqMatrix row_space_rref(const FqMatrix& m) {
  const Fq& F = m.field();
  FqMatrix w = m;
  const int rows = w.rows(), cols = w.cols();
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows; ++i)
      if (!F.is_zero(w.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int j = 0; j < cols; ++j) std::swap(w.at(pivot, j), w.at(lead, j));
    const FqElem s = F.inv(w.at(lead, col));
    for (int j = 0; j < cols; ++j) w.at(lead, j) = F.mul(s, w.at(lead, j));
    for (int i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const FqElem f = w.at(i, col);
      if (F.is_zero(f)) continue;
      for (int j = 0; j < cols; ++j)
        w.at(i, j) = F.sub(w.at(i, j), F.mul(f, w.at(lead, j)));
    }
    ++lead;
  }
  FqMatrix out(&F, lead, cols);
  for (int i = 0; i < lead; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = w.at(i, j);
  return out;
}

int matrix_rank(const FqMatrix& m) { return row_space_rref(m).rows(); }

int element_order(const FqMatrix& x, std::uint64_t cap) {
  FqMatrix y = x;
  std::uint64_t k = 1;
  while (!y.is_identity()) {
    y = y * x;
    if (++k > cap) throw std::runtime_error("element_order: cap exceeded");
  }
  return static_cast<int>(k);
}

bool is_unipotent(const FqMatrix& x) {
  const FqMatrix n = x.sub(FqMatrix::identity(x.field(), x.rows()));
  return n.pow(static_cast<std::uint64_t>(x.rows())).is_zero();
}

Family family_from_string(const std::string& s) {
  if (s == "GL" || s == "gl") return Family::GL;
  if (s == "SL" || s == "sl") return Family::SL;
  if (s == "Sp" || s == "sp" || s == "SP") return Family::Sp;
  throw std::invalid_argument("unknown family '" + s + "' (GL, SL, Sp)");
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::GL:
      return "GL";
    case Family::SL:
      return "SL";
    case Family::Sp:
      return "Sp";
  }
  return "?";
}

namespace {

// Coordinates of a root in the character basis eps_1..eps_n of the diagonal
// torus.  GL/SL: alpha_k = eps_k - eps_{k+1}.  Sp_2m: slots are eps_1..eps_m
// with alpha_k = eps_k - eps_{k+1} for k < m and alpha_m = 2 eps_m.
std::vector<int> gl_eps(const RootCoords& c, int n) {
  std::vector<int> v(n, 0);
  for (int i = 0; i < n; ++i) {
    const int a = i < n - 1 ? c[i] : 0;
    const int b = i > 0 ? c[i - 1] : 0;
    v[i] = a - b;
  }
  return v;
}

std::vector<int> sp_eps(const RootCoords& c, int m) {
  std::vector<int> v(m, 0);
  for (int i = 0; i + 1 < m; ++i) v[i] = c[i] - (i > 0 ? c[i - 1] : 0);
  v[m - 1] = 2 * c[m - 1] - (m > 1 ? c[m - 2] : 0);
  return v;
}

}  // namespace

LieGroupData::LieGroupData(Family family, int n,
                           std::shared_ptr<const Fq> field, RootSystem roots)
    : family_(family), n_(n), field_(std::move(field)), roots_(std::move(roots)) {}

LieGroupData LieGroupData::build(Family family, int n,
                                 std::shared_ptr<const Fq> field) {
  if (!field) throw std::invalid_argument("LieGroupData: null field");
  if (family == Family::Sp) {
    if (n < 2 || n % 2 != 0)
      throw std::invalid_argument("LieGroupData: Sp needs even n >= 2");
  } else {
    if (n < 2) throw std::invalid_argument("LieGroupData: GL/SL need n >= 2");
  }
  const int m = n / 2;
  // Sp_2 carries the rank-1 system (C_1 = A_1), with its root realized as
  // 2 eps_1.
  RootSystem rs = family == Family::Sp
                      ? (m >= 2 ? RootSystem(DynkinType::C, m)
                                : RootSystem(DynkinType::A, 1))
                      : RootSystem(DynkinType::A, n - 1);
  LieGroupData g(family, n, std::move(field), std::move(rs));

  const auto add_template = [&](const RootCoords& alpha,
                                std::vector<std::array<int, 3>> entries) {
    g.templates_[alpha] = EntryTemplate{std::move(entries)};
  };

  for (const RootCoords& pos : g.roots_.positive_roots()) {
    RootCoords neg(pos);
    for (int& x : neg) x = -x;
    for (const RootCoords* rootp :
         std::initializer_list<const RootCoords*>{&pos, &neg}) {
      const RootCoords& alpha = *rootp;
      if (g.family_ != Family::Sp) {
        const auto v = gl_eps(alpha, n);
        int plus = -1, minus = -1;
        for (int i = 0; i < n; ++i) {
          if (v[i] == 1) plus = i;
          if (v[i] == -1) minus = i;
        }
        if (plus < 0 || minus < 0)
          throw std::logic_error("LieGroupData: bad GL root");
        add_template(alpha, {{{plus, minus, +1}}});
      } else {
        const auto v = sp_eps(alpha, m);
        const auto pr = [m](int i) { return 2 * m - 1 - i; };
        std::vector<int> nz;
        for (int i = 0; i < m; ++i)
          if (v[i] != 0) nz.push_back(i);
        if (nz.size() == 1 && v[nz[0]] == 2) {
          add_template(alpha, {{{nz[0], pr(nz[0]), +1}}});
        } else if (nz.size() == 1 && v[nz[0]] == -2) {
          add_template(alpha, {{{pr(nz[0]), nz[0], +1}}});
        } else if (nz.size() == 2) {
          const int i = nz[0], j = nz[1];
          if (v[i] == 1 && v[j] == -1) {
            add_template(alpha, {{{i, j, +1}, {pr(j), pr(i), -1}}});
          } else if (v[i] == -1 && v[j] == 1) {
            add_template(alpha, {{{j, i, +1}, {pr(i), pr(j), -1}}});
          } else if (v[i] == 1 && v[j] == 1) {
            add_template(alpha, {{{i, pr(j), +1}, {j, pr(i), +1}}});
          } else if (v[i] == -1 && v[j] == -1) {
            add_template(alpha, {{{pr(j), i, +1}, {pr(i), j, +1}}});
          } else {
            throw std::logic_error("LieGroupData: bad Sp root");
          }
        } else {
          throw std::logic_error("LieGroupData: bad Sp root");
        }
      }
    }
  }

  if (g.family_ == Family::Sp) {
    g.form_ = FqMatrix(g.field_.get(), n, n);
    const Fq& F = *g.field_;
    for (int i = 0; i < m; ++i) {
      g.form_.at(i, n - 1 - i) = F.one();
      g.form_.at(n - 1 - i, i) = F.neg(F.one());
    }
  }

  g.simple_position_.resize(g.roots_.rank());
  for (int s = 0; s < g.roots_.rank(); ++s) {
    g.simple_position_[s] = g.roots_.positive_root_index(g.roots_.simple_root(s));
    if (g.simple_position_[s] < 0)
      throw std::logic_error("LieGroupData: simple root not indexed");
  }

  g.self_check();
  return g;
}

void LieGroupData::self_check() const {
  const Fq& F = *field_;
  // Each template is square-zero (one-parameter additivity) and positive
  // roots sit strictly above the diagonal.
  for (const auto& [alpha, tpl] : templates_) {
    FqMatrix nmat(field_.get(), n_, n_);
    for (const auto& e : tpl.entries)
      nmat.at(e[0], e[1]) = e[2] > 0 ? F.one() : F.neg(F.one());
    if (!(nmat * nmat).is_zero())
      throw std::logic_error("LieGroupData: template not square-zero");
    if (roots_.is_positive_root(alpha))
      for (const auto& e : tpl.entries)
        if (e[0] >= e[1])
          throw std::logic_error("LieGroupData: positive root not upper");
  }
  // Sp generators preserve the form.
  if (family_ == Family::Sp) {
    for (const auto& [alpha, tpl] : templates_) {
      (void)tpl;
      const FqMatrix x = root_subgroup_element(alpha, F.primitive_element());
      if (x.transpose() * form_ * x != form_)
        throw std::logic_error("LieGroupData: root element breaks the form");
    }
    for (const FqMatrix& t : torus_generators())
      if (t.transpose() * form_ * t != form_)
        throw std::logic_error("LieGroupData: torus breaks the form");
  }
}

std::vector<RootCoords> LieGroupData::all_roots() const {
  std::vector<RootCoords> out = roots_.positive_roots();
  for (const RootCoords& c : roots_.positive_roots()) {
    RootCoords neg(c);
    for (int& x : neg) x = -x;
    out.push_back(neg);
  }
  return out;
}

const LieGroupData::EntryTemplate& LieGroupData::entry_template(
    const RootCoords& alpha) const {
  const auto it = templates_.find(alpha);
  if (it == templates_.end())
    throw std::invalid_argument("LieGroupData: " + root_to_string(alpha) +
                                " is not a root of this group");
  return it->second;
}

FqMatrix LieGroupData::root_subgroup_element(const RootCoords& alpha,
                                             FqElem c) const {
  const EntryTemplate& tpl = entry_template(alpha);
  const Fq& F = *field_;
  FqMatrix x = identity();
  for (const auto& e : tpl.entries) x.at(e[0], e[1]) = e[2] > 0 ? c : F.neg(c);
  return x;
}

std::pair<int, int> LieGroupData::root_leading_entry(
    const RootCoords& alpha) const {
  const auto& e = entry_template(alpha).entries.front();
  return {e[0], e[1]};
}

FqElem LieGroupData::root_character(const RootCoords& alpha,
                                    const FqMatrix& t) const {
  if (!t.is_diagonal())
    throw std::invalid_argument("LieGroupData: torus element must be diagonal");
  const auto [row, col] = root_leading_entry(alpha);
  return field_->mul(t.at(row, row), field_->inv(t.at(col, col)));
}

int LieGroupData::torus_rank() const {
  return family_ == Family::Sp ? n_ / 2 : n_;
}

FqMatrix LieGroupData::torus_element(const std::vector<FqElem>& params) const {
  const Fq& F = *field_;
  if (static_cast<int>(params.size()) != torus_rank())
    throw std::invalid_argument("LieGroupData: torus wants " +
                                std::to_string(torus_rank()) + " parameters");
  for (FqElem t : params)
    if (F.is_zero(t))
      throw std::invalid_argument("LieGroupData: torus parameter is zero");
  FqMatrix t(field_.get(), n_, n_);
  if (family_ == Family::Sp) {
    const int m = n_ / 2;
    for (int i = 0; i < m; ++i) {
      t.at(i, i) = params[i];
      t.at(n_ - 1 - i, n_ - 1 - i) = F.inv(params[i]);
    }
  } else {
    if (family_ == Family::SL) {
      FqElem prod = F.one();
      for (FqElem x : params) prod = F.mul(prod, x);
      if (!(prod == F.one()))
        throw std::invalid_argument("LieGroupData: SL torus needs product 1");
    }
    for (int i = 0; i < n_; ++i) t.at(i, i) = params[i];
  }
  return t;
}

std::uint64_t LieGroupData::torus_order() const {
  const std::uint64_t u = field_->q() - 1;
  const int free = family_ == Family::SL ? n_ - 1 : torus_rank();
  std::uint64_t out = 1;
  for (int i = 0; i < free; ++i) out *= u;
  return out;
}

std::vector<FqMatrix> LieGroupData::torus_elements(std::uint64_t budget) const {
  const Fq& F = *field_;
  const std::uint64_t count = torus_order();
  if (count > budget)
    throw BudgetExceeded("LieGroupData: torus enumeration", count, budget);
  const int free = family_ == Family::SL ? n_ - 1 : torus_rank();
  const std::uint32_t u = F.q() - 1;
  std::vector<FqMatrix> out;
  out.reserve(count);
  std::vector<std::uint32_t> odo(free, 0);
  for (std::uint64_t it = 0; it < count; ++it) {
    std::vector<FqElem> params;
    params.reserve(torus_rank());
    for (int i = 0; i < free; ++i)
      params.push_back({static_cast<std::uint16_t>(odo[i] + 1)});
    if (family_ == Family::SL) {
      FqElem prod = F.one();
      for (FqElem x : params) prod = F.mul(prod, x);
      params.push_back(F.inv(prod));
    }
    out.push_back(torus_element(params));
    for (int i = 0; i < free; ++i) {
      if (++odo[i] < u) break;
      odo[i] = 0;
    }
  }
  return out;
}

std::vector<FqMatrix> LieGroupData::torus_generators() const {
  const Fq& F = *field_;
  const FqElem g = F.primitive_element();
  std::vector<FqMatrix> out;
  if (family_ == Family::SL) {
    for (int i = 0; i + 1 < n_; ++i) {
      std::vector<FqElem> params(n_, F.one());
      params[i] = g;
      params[i + 1] = F.inv(g);
      out.push_back(torus_element(params));
    }
  } else {
    for (int i = 0; i < torus_rank(); ++i) {
      std::vector<FqElem> params(torus_rank(), F.one());
      params[i] = g;
      out.push_back(torus_element(params));
    }
  }
  return out;
}

bool LieGroupData::in_group(const FqMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) return false;
  switch (family_) {
    case Family::GL:
      return !field_->is_zero(x.det());
    case Family::SL:
      return x.det() == field_->one();
    case Family::Sp:
      return x.transpose() * form_ * x == form_;
  }
  return false;
}

std::optional<std::vector<FqElem>> LieGroupData::u_coordinates(
    const FqMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_ || !x.is_upper_unitriangular())
    return std::nullopt;
  const Fq& F = *field_;
  const auto& pos = roots_.positive_roots();
  std::vector<FqElem> coords(pos.size(), F.zero());
  FqMatrix cur = x;
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const auto [row, col] = root_leading_entry(pos[k]);
    const FqElem c = cur.at(row, col);
    coords[k] = c;
    if (!F.is_zero(c))
      cur = root_subgroup_element(pos[k], F.neg(c)) * cur;
  }
  if (!cur.is_identity()) return std::nullopt;
  return coords;
}

bool LieGroupData::in_U_s(const FqMatrix& x, int s) const {
  return field_->is_zero(simple_coordinate(x, s));
}

FqElem LieGroupData::simple_coordinate(const FqMatrix& x, int s) const {
  if (s < 0 || s >= roots_.rank())
    throw std::invalid_argument("LieGroupData: simple index out of range");
  const auto coords = u_coordinates(x);
  if (!coords)
    throw std::invalid_argument("LieGroupData: element is not in U");
  return (*coords)[simple_position_[s]];
}

std::uint64_t LieGroupData::U_order() const {
  unsigned __int128 acc = 1;
  for (std::size_t i = 0; i < roots_.positive_roots().size(); ++i) {
    acc *= field_->q();
    if (acc > static_cast<unsigned __int128>(UINT64_MAX))
      throw std::overflow_error("LieGroupData: |U| exceeds 2^64");
  }
  return static_cast<std::uint64_t>(acc);
}

void LieGroupData::for_each_in_U(
    const std::function<void(const FqMatrix&)>& fn,
    std::uint64_t budget) const {
  const std::uint64_t count = U_order();
  if (count > budget)
    throw BudgetExceeded("LieGroupData: U enumeration", count, budget);
  const auto& pos = roots_.positive_roots();
  const std::uint32_t q = field_->q();
  // Depth-first over coordinate tuples with shared partial products, so the
  // whole sweep costs about |U| multiplications.
  std::vector<FqMatrix> partial(pos.size() + 1, identity());
  std::vector<std::uint32_t> code(pos.size(), 0);
  const std::size_t depth = pos.size();
  std::size_t level = 0;
  while (true) {
    if (level == depth) {
      fn(partial[depth]);
      // backtrack to the deepest level that can still advance
      while (level > 0 && code[level - 1] + 1 == q) {
        code[level - 1] = 0;
        --level;
      }
      if (level == 0) return;
      ++code[level - 1];
      partial[level] =
          partial[level - 1] *
          root_subgroup_element(pos[level - 1],
                                {static_cast<std::uint16_t>(code[level - 1])});
      continue;
    }
    // descend with coordinate 0 (identity factor)
    partial[level + 1] = partial[level];
    ++level;
  }
}

std::vector<FqMatrix> LieGroupData::enumerate_U(std::uint64_t budget) const {
  std::vector<FqMatrix> out;
  out.reserve(U_order() > budget ? 0 : U_order());
  for_each_in_U([&out](const FqMatrix& x) { out.push_back(x); }, budget);
  return out;
}

std::vector<FqMatrix> LieGroupData::U_generators() const {
  std::vector<FqMatrix> out;
  for (const RootCoords& alpha : roots_.positive_roots())
    for (FqElem b : field_->fp_basis())
      out.push_back(root_subgroup_element(alpha, b));
  return out;
}

}  // namespace lietype
