import pytest

import ielogic as iel


def test_parse_and_render():
    f = iel.parse("K(p & q)")
    assert str(f) == "K (p & q)"
    assert f.kind == "know"
    assert f.children[0].kind == "and"
    assert iel.parse("~~p") == iel.parse("(p -> false) -> false")
    assert iel.atoms("K q -> p") == ["p", "q"]


def test_parse_error_offset():
    with pytest.raises(iel.ParseError) as info:
        iel.parse("p ->")
    assert info.value.offset == 4
    assert isinstance(info.value, ValueError)


def test_decide():
    assert iel.decide(iel.Logic.IEL, "~K false").valid
    v = iel.decide(iel.Logic.IELMinus, "~K false")
    assert v.invalid and v.kind == "invalid"
    model, world = v.countermodel
    assert model.validate() == []
    assert not model.forces(world, "~K false")
    assert iel.decide(iel.Logic.IEL, "K p -> p", max_labels=1).unknown
    assert iel.decide_ipc("~~(p | ~p)").valid
    with pytest.raises(iel.LanguageError):
        iel.decide(iel.Logic.IEL, "[]p")


def test_models():
    m2 = iel.builtin_model("M2")
    assert m2.forces(1, "K p")
    assert not m2.forces(1, "K p -> p")
    assert m2.holds("K p -> ~~p")
    m4 = iel.builtin_model("M4")
    conditions = [c for c, _ in m4.validate(iel.Logic.IEL)]
    assert conditions == ["E-serial", "E-serial"]
    m = iel.parse_model("logic: IEL\nworlds: 1 2\nR: 1 2\nE: 1 2; 2 2\nval: p: 2\n")
    assert m.R == [(1, 1), (1, 2), (2, 2)]
    assert m.truth_set("K p") == [1, 2]
    with pytest.raises(iel.ModelError):
        iel.parse_model("worlds: 1\n")


def test_search():
    assert iel.count_models(iel.Logic.IEL, 2, ["p"]) == 22
    found = iel.find_countermodel(iel.Logic.IEL, "K p -> p", max_worlds=2)
    assert found is not None
    assert iel.find_countermodel(iel.Logic.IEL, "~K false", max_worlds=3) is None


def test_translations():
    assert str(iel.godel_translate("K p")) == "[]V[]p"
    assert str(iel.glivenko_translate("p | ~p")) == "~~(p | ~p)"
    assert str(iel.kolmogorov_translate("K p")) == "~~K ~~p"
    assert iel.find_classical_countermodel("S4V", iel.godel_translate("~K false")) is None


def test_proofs():
    names = iel.library_proofs()
    assert len(names) >= 12
    for name in names:
        assert iel.check_proof(iel.library_proof(name)) is None
    text = iel.library_proof("ielth-1").replace("logic: IEL", "logic: IEL-")
    line, reason = iel.check_proof(text)
    assert line == 1 and "IR" in reason


def test_suite():
    rows = iel.run_paper_suite()
    assert rows and all(passed for *_, passed in rows)
