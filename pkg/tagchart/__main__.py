from tagchart.cli import app

app(prog_name="tagchart")
