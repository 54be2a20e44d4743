#pragma once

#include <string>
#include <vector>

#include "renorm/algebra.hpp"

// Coalgebra structure on words and the antipode.

namespace renorm {

/// How the coproduct treats a formal R application.
enum class RBranch {
    /// Delta[R[X]] = Delta[X]; the default.
    Forget,
    /// Delta[R[X]] = (id (x) R) Delta[X], with R applied to each iPW of the
    /// right leg. This variant is coassociative without any rewriting.
    WrapRight,
};

struct CoproductOptions {
    RBranch rBranch = RBranch::Forget;
};

/// One rule application recorded while expanding a coproduct.
struct TraceStep {
    std::string rule;
    std::string input;
    std::string output;
};

using Trace = std::vector<TraceStep>;

/// B_x: X (x) Y -> X (x) (Y x). Throws std::logic_error when a right leg
/// carries an R application.
Tensor2 graft(const Letter &x, const Tensor2 &t);

Tensor2 coproduct(const Expr &a, const CoproductOptions &options = {}, Trace *trace = nullptr);
Tensor2 coproduct(const Word &w, const CoproductOptions &options = {}, Trace *trace = nullptr);

/// Delta[t] = sum over subwords U of R[U] (x) t/U, with R applied to each
/// connected component of U.
Tensor2 coproductViaSubwords(const Ipw &t);

/// Linear and multiplicative. Bare iPWs use
///   S[t] = -t - m[(id (x) S) P2 Delta[t]],
/// R applications use
///   S[R[m]] = -R[m + m[(S (x) id) P2 Delta[m]]].
Expr antipode(const Expr &a);

/// Counterterm from the forest recursion
///   Z(t) = -R[t] - sum over antichains A of R[prod Z(s) * t/A].
Expr forestZ(const Ipw &t);
/// Product of the counterterms of the irreducible factors. Agrees with
/// antipode(applyR(w)) after multiplicativeNormalForm.
Expr forestZ(const Word &w);

/// m[(S (x) id) Delta[a]]
Expr renormalize(const Expr &a);
Expr renormalize(const Word &w);
/// m[(S (x) id) P_R Delta[a]]
Expr barR(const Expr &a);
Expr barR(const Word &w);

/// (Delta (x) id) Delta - (id (x) Delta) Delta
Tensor3 coassocDefect(const Expr &a, const CoproductOptions &options = {});

/// Contracts the first two legs with (R o m) (x) id. Two tensors that agree
/// after contraction and condRewrite define the same subtraction terms.
Tensor2 contractLeftPair(const Tensor3 &t);

/// Contracted coassociativity defect; with `rewrite` the result is reduced
/// by condRewrite, which must give zero for the default branch.
Tensor2 contractedCoassocDefect(const Expr &a, bool rewrite, const CoproductOptions &options = {});

/// Delta - Delta^op
Tensor2 cocommDefect(const Expr &a);

/// Erases R on the non-unit leg of every term that has a unit leg, so that
/// R[X] (x) e and X (x) e are identified.
Tensor2 reduceUnitLegs(const Tensor2 &t);

/// R[(e (x) id) Delta[a]] and R[(id (x) e) Delta[a]] reduced by condRewrite;
/// both equal condRewrite(R[a]) when the counit laws hold.
Expr counitLeftImage(const Expr &a);
Expr counitRightImage(const Expr &a);

} // namespace renorm
