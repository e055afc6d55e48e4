import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root !== null) {
  void createApp(root);
}
