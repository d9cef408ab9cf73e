#include "test_main.hpp"

#include "eqob/errors.hpp"
#include "eqob/matrix.hpp"

using namespace eqob;

TEST_CASE("dense products and stacking") {
    IntMatrix a{{1, 2}, {3, 4}};
    IntMatrix b{{0, 1}, {1, 0}};
    CHECK(a * b == IntMatrix{{2, 1}, {4, 3}});
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(a + b - b == a);
    CHECK(2 * a == IntMatrix{{2, 4}, {6, 8}});
    CHECK(a.transpose() == IntMatrix{{1, 3}, {2, 4}});
    CHECK(hstack(a, b) == IntMatrix{{1, 2, 0, 1}, {3, 4, 1, 0}});
    CHECK(vstack(a, b).rows() == 4);
    auto d = direct_sum(a, b);
    CHECK(d.rows() == 4);
    CHECK(d.block(2, 2, 2, 2) == b);
    CHECK(d.block(0, 2, 2, 2).is_zero());
}

TEST_CASE("block edits") {
    IntMatrix m(3, 3);
    m.set_block(1, 1, IntMatrix{{1, 2}, {3, 4}});
    m.add_block(1, 1, IntMatrix{{1, 1}, {1, 1}}, -1);
    CHECK(m == IntMatrix{{0, 0, 0}, {0, 0, 1}, {0, 2, 3}});
    m.swap_rows(0, 2);
    m.swap_cols(0, 2);
    CHECK(m == IntMatrix{{3, 2, 0}, {1, 0, 0}, {0, 0, 0}});
}

TEST_CASE("sparse matrix accumulates and drops cancelled entries") {
    SparseMatrix s(2, 3);
    s.add(0, 2, 5);
    s.add(0, 2, -5);
    s.add(1, 0, 3);
    s.add(1, 0, 4);
    s.finalize();
    CHECK(s.nonzeros() == 1);
    CHECK(s.to_dense() == IntMatrix{{0, 0, 0}, {7, 0, 0}});
    CHECK(s.transpose().to_dense() == s.to_dense().transpose());
}

TEST_CASE("sparse product agrees with dense product") {
    IntMatrix a{{1, 0, -2}, {0, 3, 1}};
    IntMatrix b{{2, 1}, {0, -1}, {4, 0}};
    auto p = SparseMatrix::from_dense(a).multiply(SparseMatrix::from_dense(b));
    CHECK(p.to_dense() == a * b);
}

TEST_CASE("from_dense rejects entries beyond a machine word") {
    IntMatrix m(1, 1);
    m(0, 0) = BigInt("100000000000000000000000");
    CHECK_THROWS_AS(SparseMatrix::from_dense(m), InvalidArgument);
}
