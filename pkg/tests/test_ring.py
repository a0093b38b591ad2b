import json
import random
import threading

import pytest
from hypothesis import given
from hypothesis import strategies as st

from schur_oracle import schur_product
from schubcalc.errors import ContextMismatchError, ValidationError
from schubcalc.ring import CohomologyClass, basis_product, cup, cup_nonzero, duality_coefficient, lr_coefficient
from schubcalc.young import RectangleContext, YoungDiagram, complement, overlap_test

C24 = RectangleContext(2, 4)
C48 = RectangleContext(4, 8)


def sig(parts, ctx):
    return CohomologyClass.sigma(YoungDiagram(parts), ctx)


def partitions(total, max_part=None):
    if total == 0:
        yield ()
        return
    max_part = total if max_part is None else max_part
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def rectangles(max_area):
    for k in range(1, max_area + 1):
        for n in range(k + 1, k + max_area // k + 1):
            yield RectangleContext(k, n)


class TestLRCoefficient:
    @pytest.mark.parametrize(
        "lam, mu, nu, expected",
        [
            ((2,), (2,), (2, 2), 1),
            ((1, 1), (1, 1), (1, 1, 1, 1), 1),
            ((2,), (1, 1), (2, 2), 0),
            ((2, 1), (2, 1), (3, 2, 1), 2),
        ],
    )
    def test_examples(self, lam, mu, nu, expected):
        assert lr_coefficient(lam, mu, nu) == expected

    @pytest.mark.parametrize("lam", [(), (1,), (3, 1), (2, 2, 1)])
    def test_unit(self, lam):
        assert lr_coefficient(lam, (), lam) == 1
        assert lr_coefficient((), lam, lam) == 1

    def test_degenerate(self):
        assert lr_coefficient((2,), (1,), (2, 2)) == 0  # area mismatch
        assert lr_coefficient((3,), (1,), (2, 2)) == 0  # lam not inside nu

    def test_matches_schur_oracle(self):
        # every pair with |lam| + |mu| <= 7
        checked = 0
        for a in range(0, 5):
            for b in range(0, 8 - a):
                if a + b > 7:
                    continue
                for lam in partitions(a):
                    for mu in partitions(b):
                        expected = schur_product(lam, mu)
                        for nu in partitions(a + b):
                            assert lr_coefficient(lam, mu, nu) == expected.get(nu, 0), (lam, mu, nu)
                            checked += 1
        assert checked > 500

    def test_symmetries(self):
        for a in range(1, 5):
            for b in range(1, 5):
                for lam in partitions(a):
                    for mu in partitions(b):
                        for nu in partitions(a + b):
                            c = lr_coefficient(lam, mu, nu)
                            assert c == lr_coefficient(mu, lam, nu)
                            conj = lambda p: YoungDiagram(p).conjugate()
                            assert c == lr_coefficient(conj(lam), conj(mu), conj(nu))


class TestCup:
    def test_gr24_products(self):
        assert sig((2,), C24) * sig((2,), C24) == sig((2, 2), C24)
        assert sig((1, 1), C24) * sig((1, 1), C24) == sig((2, 2), C24)
        assert not sig((2,), C24) * sig((1, 1), C24)

    def test_gr48_products(self):
        assert cup(sig((2,), C48), sig((2,), C48)).as_dict() == {
            YoungDiagram((2, 2)): 1,
            YoungDiagram((4,)): 1,
            YoungDiagram((3, 1)): 1,
        }
        assert cup(sig((1, 1), C48), sig((1, 1), C48)).as_dict() == {
            YoungDiagram((2, 2)): 1,
            YoungDiagram((2, 1, 1)): 1,
            YoungDiagram((1, 1, 1, 1)): 1,
        }
        assert cup(sig((2,), C48), sig((1, 1), C48)).as_dict() == {
            YoungDiagram((3, 1)): 1,
            YoungDiagram((2, 1, 1)): 1,
        }

    def test_truncation_consistency(self):
        for a in C24.diagrams():
            for b in C24.diagrams():
                big = basis_product(a, b, C48)
                kept = {nu: c for nu, c in big if nu.length <= 2 and (not nu.parts or nu.parts[0] <= 2)}
                assert basis_product(a, b, C24).as_dict() == kept

    def test_unit(self):
        ctx = RectangleContext(3, 6)
        one = CohomologyClass.one(ctx)
        x = CohomologyClass({YoungDiagram((2, 1)): 3, YoungDiagram((1,)): -2, YoungDiagram(()): 5}, ctx)
        assert one * x == x == x * one

    def test_context_mismatch(self):
        with pytest.raises(ContextMismatchError):
            cup(sig((1,), C24), sig((1,), C48))
        with pytest.raises(ContextMismatchError):
            sig((1,), C24) + sig((1,), C48)

    def test_bilinearity(self):
        ctx = RectangleContext(3, 6)
        a = CohomologyClass({YoungDiagram((1,)): 2, YoungDiagram((2,)): -1}, ctx)
        b = CohomologyClass({YoungDiagram((1, 1)): 3, YoungDiagram((1,)): 1}, ctx)
        c = sig((2, 1), ctx)
        assert cup(a + b, c) == cup(a, c) + cup(b, c)
        assert cup(3 * a, c) == 3 * cup(a, c)

    def test_commutative_exhaustive(self):
        for ctx in rectangles(12):
            basis = list(ctx.diagrams())
            for lam in basis:
                for mu in basis:
                    assert basis_product(lam, mu, ctx) == basis_product(mu, lam, ctx)

    def test_associative_sampled(self):
        rng = random.Random(2024)
        for ctx in rectangles(9):
            basis = list(ctx.diagrams())
            for _ in range(40):
                a, b, c = (CohomologyClass.sigma(rng.choice(basis), ctx) for _ in range(3))
                assert cup(cup(a, b), c) == cup(a, cup(b, c))

    def test_grading_and_positivity(self):
        for ctx in rectangles(12):
            for lam in ctx.diagrams():
                for mu in ctx.diagrams():
                    for nu, coeff in basis_product(lam, mu, ctx):
                        assert nu.area == lam.area + mu.area
                        assert coeff > 0

    def test_lemma_equivalence_exhaustive(self):
        for ctx in rectangles(12):
            for lam in ctx.diagrams():
                for mu in ctx.diagrams():
                    assert cup_nonzero(lam, mu, ctx) == overlap_test(lam, mu, ctx), (ctx, lam, mu)

    def test_concurrent_memo_is_deterministic(self):
        ctx = RectangleContext(3, 7)
        pairs = [(a, b) for a in ctx.diagrams() for b in ctx.diagrams()]
        expected = {p: basis_product(*p, ctx) for p in pairs}
        results = []

        def work():
            results.append({p: basis_product(*p, ctx) for p in pairs})

        threads = [threading.Thread(target=work) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == expected for r in results)


class TestCupNonzero:
    def test_figure_instance(self):
        assert cup_nonzero((5, 3, 2, 2, 1), (5, 5, 4, 2, 0), RectangleContext(5, 12))

    def test_small(self):
        assert not cup_nonzero((2,), (1, 1), C24)

    def test_complement(self):
        ctx = RectangleContext(3, 7)
        for lam in ctx.diagrams():
            assert cup_nonzero(lam, complement(lam, ctx), ctx)


class TestDuality:
    def test_examples(self):
        assert duality_coefficient((2,), (2,), C24) == 1
        assert lr_coefficient((2,), (2,), (2, 2)) == 1
        assert duality_coefficient((2,), (1, 1), C24) == 0
        assert duality_coefficient((2, 2), (), C24) == 1

    def test_degree_mismatch(self):
        assert duality_coefficient((1,), (1,), C24) == 0

    @pytest.mark.parametrize("k, n", [(2, 4), (2, 5), (3, 6), (3, 7)])
    def test_pairing_is_identity_on_complements(self, k, n):
        ctx = RectangleContext(k, n)
        for lam in ctx.diagrams():
            for mu in ctx.diagrams(ctx.area - lam.area):
                assert duality_coefficient(lam, mu, ctx) == int(mu == complement(lam, ctx))


class TestSerialization:
    def test_text_format(self):
        x = basis_product((2,), (1, 1), C48)
        assert x.to_text() == "[3,1] + [2,1,1]"
        assert CohomologyClass.zero(C24).to_text() == "0"
        y = CohomologyClass({YoungDiagram((2, 1)): 3, YoungDiagram((1, 1, 1)): 1}, C48)
        assert y.to_text() == "3*[2,1] + [1,1,1]"
        assert CohomologyClass.from_text("3*[2,1] + 1*[1,1,1]", C48) == y

    def test_text_negative_and_unit(self):
        x = CohomologyClass({YoungDiagram(()): -2, YoungDiagram((1,)): 1}, C24)
        assert x.to_text() == "[1] - 2*[]"
        assert CohomologyClass.from_text(x.to_text(), C24) == x

    @pytest.mark.parametrize("bad", ["", "[1] [2]", "3*", "[a]", "[3]"])
    def test_text_errors(self, bad):
        with pytest.raises(ValidationError):
            CohomologyClass.from_text(bad, C24)

    def test_json_schema(self):
        x = basis_product((2,), (2,), C48)
        data = x.to_json()
        assert data == {
            "terms": [
                {"diagram": [4], "coeff": 1},
                {"diagram": [3, 1], "coeff": 1},
                {"diagram": [2, 2], "coeff": 1},
            ],
            "k": 4,
            "n": 8,
        }
        assert CohomologyClass.from_json(json.dumps(data)) == x

    @given(st.dictionaries(st.sampled_from(list(C48.diagrams())), st.integers(-50, 50), max_size=8))
    def test_roundtrips(self, terms):
        x = CohomologyClass(terms, C48)
        assert CohomologyClass.from_text(x.to_text(), C48) == x
        assert CohomologyClass.from_json(json.loads(json.dumps(x.to_json()))) == x
        assert all(c != 0 for _, c in x)

    def test_rejects_non_fitting_terms(self):
        with pytest.raises(ValidationError):
            CohomologyClass({YoungDiagram((3,)): 1}, C24)
