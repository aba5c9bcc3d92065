import invoke


@invoke.task()
def lint(ctx: invoke.Context):
    ctx.run("ruff check narigama_tribquat")
    ctx.run("black --check narigama_tribquat tests")


@invoke.task()
def test_run(ctx: invoke.Context):
    ctx.run("pytest --cov=narigama_tribquat --cov-report=xml:coverage.xml")


@invoke.task()
def verify(ctx: invoke.Context, n_max: int = 20):
    ctx.run("python -m narigama_tribquat verify --identity all --n-max {} --format text".format(n_max))
