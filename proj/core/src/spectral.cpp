#include "symcone/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symcone/errors.hpp"

namespace symcone {
namespace {

// Unit direction of an SOC vector part. At x = 0 both eigenvalues coincide and
// any direction gives the same Löwner image; the first coordinate axis is used.
Eigen::VectorXd soc_direction(const Eigen::Ref<const Eigen::VectorXd>& x,
                              double* norm_out) {
  const double n = x.norm();
  *norm_out = n;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(x.size());
  if (n > 0.0) {
    u = x / n;
  } else {
    u[0] = 1.0;
  }
  return u;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> psd_solve(
    const Eigen::Ref<const Eigen::MatrixXd>& m, bool vectors) {
  if (!m.allFinite()) {
    throw DomainError("eigendecomposition of a PSD block with non-finite entries");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      m, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw DomainError("symmetric eigensolver did not converge");
  }
  return es;
}

}  // namespace

AlgebraElement SpectralDecomposition::reconstruct() const {
  if (frame.empty()) {
    throw StructureMismatch("cannot reconstruct an empty decomposition");
  }
  AlgebraElement out(frame.front().structure_ptr());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    out += eigenvalues[i] * frame[i];
  }
  return out;
}

SpectralDecomposition spectral_decompose(const AlgebraElement& x) {
  const StructurePtr& sp = x.structure_ptr();
  const ConeStructure& s = *sp;
  SpectralDecomposition out;
  out.eigenvalues.reserve(s.rank());
  out.frame.reserve(s.rank());
  out.block_of.reserve(s.rank());

  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    const Block& blk = s.block(b);
    switch (blk.kind) {
      case BlockKind::kOrthant: {
        auto v = x.orthant_block(b);
        for (int i = 0; i < blk.dim; ++i) {
          AlgebraElement q(sp);
          q.orthant_block(b)[i] = 1.0;
          out.eigenvalues.push_back(v[i]);
          out.frame.push_back(std::move(q));
          out.block_of.push_back(b);
        }
        break;
      }
      case BlockKind::kSoc: {
        double n = 0.0;
        const Eigen::VectorXd u = soc_direction(x.soc_vector(b), &n);
        const double sc = x.soc_scalar(b);
        for (double sign : {1.0, -1.0}) {
          AlgebraElement q(sp);
          q.soc_vector(b) = 0.5 * sign * u;
          q.soc_scalar(b) = 0.5;
          out.eigenvalues.push_back(sc + sign * n);
          out.frame.push_back(std::move(q));
          out.block_of.push_back(b);
        }
        break;
      }
      case BlockKind::kPsd: {
        auto es = psd_solve(x.psd_block(b), true);
        for (int i = blk.dim - 1; i >= 0; --i) {
          const Eigen::VectorXd v = es.eigenvectors().col(i);
          AlgebraElement q(sp);
          q.psd_block(b) = v * v.transpose();
          out.eigenvalues.push_back(es.eigenvalues()[i]);
          out.frame.push_back(std::move(q));
          out.block_of.push_back(b);
        }
        break;
      }
    }
  }
  return out;
}

Eigen::VectorXd eigenvalues(const AlgebraElement& x) {
  const ConeStructure& s = x.structure();
  Eigen::VectorXd out(s.rank());
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    const Block& blk = s.block(b);
    const int off = s.rank_offset(b);
    switch (blk.kind) {
      case BlockKind::kOrthant:
        out.segment(off, blk.dim) = x.orthant_block(b);
        break;
      case BlockKind::kSoc: {
        const double n = x.soc_vector(b).norm();
        out[off] = x.soc_scalar(b) + n;
        out[off + 1] = x.soc_scalar(b) - n;
        break;
      }
      case BlockKind::kPsd: {
        auto es = psd_solve(x.psd_block(b), false);
        out.segment(off, blk.dim) = es.eigenvalues().reverse();
        break;
      }
    }
  }
  return out;
}

double min_eigenvalue(const AlgebraElement& x) {
  return eigenvalues(x).minCoeff();
}

double max_eigenvalue(const AlgebraElement& x) {
  return eigenvalues(x).maxCoeff();
}

namespace {

// Eigen-data of every block, enough to rebuild any Löwner image.
struct BlockSpectra {
  Eigen::VectorXd values;  // eigenvalue order of spectral_decompose
  std::vector<Eigen::VectorXd> soc_dirs;
  std::vector<Eigen::MatrixXd> psd_vectors;  // columns in descending order
};

BlockSpectra decompose_blocks(const AlgebraElement& x) {
  const ConeStructure& s = x.structure();
  BlockSpectra out;
  out.values.resize(s.rank());
  out.soc_dirs.resize(s.num_blocks());
  out.psd_vectors.resize(s.num_blocks());
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    const Block& blk = s.block(b);
    const int off = s.rank_offset(b);
    switch (blk.kind) {
      case BlockKind::kOrthant:
        out.values.segment(off, blk.dim) = x.orthant_block(b);
        break;
      case BlockKind::kSoc: {
        double n = 0.0;
        out.soc_dirs[b] = soc_direction(x.soc_vector(b), &n);
        out.values[off] = x.soc_scalar(b) + n;
        out.values[off + 1] = x.soc_scalar(b) - n;
        break;
      }
      case BlockKind::kPsd: {
        auto es = psd_solve(x.psd_block(b), true);
        out.values.segment(off, blk.dim) = es.eigenvalues().reverse();
        out.psd_vectors[b] = es.eigenvectors().rowwise().reverse();
        break;
      }
    }
  }
  return out;
}

// sum_i f_values[i] q_i over the frame recorded in `spectra`.
AlgebraElement compose_blocks(const StructurePtr& structure,
                              const BlockSpectra& spectra,
                              const Eigen::VectorXd& f_values) {
  const ConeStructure& s = *structure;
  AlgebraElement out(structure);
  for (std::size_t b = 0; b < s.num_blocks(); ++b) {
    const Block& blk = s.block(b);
    const int off = s.rank_offset(b);
    switch (blk.kind) {
      case BlockKind::kOrthant:
        out.orthant_block(b) = f_values.segment(off, blk.dim);
        break;
      case BlockKind::kSoc: {
        const double fp = f_values[off];
        const double fm = f_values[off + 1];
        out.soc_vector(b) = 0.5 * (fp - fm) * spectra.soc_dirs[b];
        out.soc_scalar(b) = 0.5 * (fp + fm);
        break;
      }
      case BlockKind::kPsd: {
        const Eigen::MatrixXd& v = spectra.psd_vectors[b];
        out.psd_block(b) =
            v * f_values.segment(off, blk.dim).asDiagonal() * v.transpose();
        break;
      }
    }
  }
  // Re-symmetrize PSD blocks against round-off in V f(L) V^T.
  return AlgebraElement(structure, out.storage());
}

}  // namespace

AlgebraElement lowner(const ScalarFn& f, const AlgebraElement& x) {
  const BlockSpectra spectra = decompose_blocks(x);
  const Eigen::VectorXd mapped = spectra.values.unaryExpr(f);
  if (mapped.hasNaN()) {
    throw DomainError("lowner: an eigenvalue lies outside the domain of f");
  }
  return compose_blocks(x.structure_ptr(), spectra, mapped);
}

AlgebraElement exp_element(const AlgebraElement& x) {
  return lowner([](double t) { return std::exp(t); }, x);
}

void require_interior(const AlgebraElement& x, const char* op) {
  const double lmin = min_eigenvalue(x);
  const double threshold = kInteriorTolerance * std::max(1.0, norm(x));
  if (!(lmin > threshold)) {
    throw DomainError(std::string(op) +
                      ": argument is not in the cone interior (lambda_min = " +
                      std::to_string(lmin) + ")");
  }
}

AlgebraElement ln_element(const AlgebraElement& x) {
  require_interior(x, "ln_element");
  return lowner([](double t) { return std::log(t); }, x);
}

AlgebraElement normalized_exp(const AlgebraElement& x) {
  const BlockSpectra spectra = decompose_blocks(x);
  const double shift = spectra.values.maxCoeff();
  const Eigen::VectorXd weights =
      (spectra.values.array() - shift).exp().matrix();
  AlgebraElement w = compose_blocks(x.structure_ptr(), spectra, weights);
  // tr(w) equals the sum of the weights; normalize by it directly.
  return w / weights.sum();
}

bool in_cone(const AlgebraElement& x, double tol) {
  return min_eigenvalue(x) >= -tol;
}

bool in_interior(const AlgebraElement& x, double tol) {
  return min_eigenvalue(x) > tol;
}

bool cone_leq(const AlgebraElement& x, const AlgebraElement& y, double tol) {
  return in_cone(y - x, tol);
}

}  // namespace symcone
