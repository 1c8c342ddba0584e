import pytest

from artex.preprocess import StopList


@pytest.fixture(scope="session")
def stoplist_en() -> StopList:
    return StopList.bundled("en")


@pytest.fixture(scope="session")
def small_doc_text() -> str:
    # Six sentences, planted repetition, one junk sentence, one decimal.
    return (
        "The solar panels convert sunlight into power. "
        "Power output from the panels peaks at noon! "
        "It was a dull gray morning. "
        "Engineers monitor the panels and log the power curve. "
        "The measured efficiency reached 21.4 percent at noon. "
        "Sunlight intensity and panel efficiency determine the power curve?"
    )
